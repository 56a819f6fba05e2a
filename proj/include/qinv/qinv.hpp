#pragma once

// Umbrella header for the whole library.

#include "qinv/numtheory.hpp"
#include "qinv/cyclotomic.hpp"
#include "qinv/hseries.hpp"
#include "qinv/gauss.hpp"
#include "qinv/invariants.hpp"
#include "qinv/tcc.hpp"
#include "qinv/verifier.hpp"
#include "qinv/io.hpp"
#include "qinv/acceptance.hpp"
