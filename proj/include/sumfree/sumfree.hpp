#pragma once

// Everything at once.

#include "sumfree/bits.hpp"
#include "sumfree/census.hpp"
#include "sumfree/core.hpp"
#include "sumfree/cyclic.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/errors.hpp"
#include "sumfree/int_set.hpp"
#include "sumfree/oracles.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/profile.hpp"
#include "sumfree/store.hpp"
#include "sumfree/structures.hpp"
#include "sumfree/verify.hpp"
