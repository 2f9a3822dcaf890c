#pragma once

// phif: the entire function f solving f(2 phi z) = f(z)^2 - 1, f(0) = phi,
// f'(0) = 1 -- the inverse of the golden-ratio nested-radical limit map --
// together with its exact Taylor table over Q(sqrt5), its zero set addressed
// by sign sequences, and its Hadamard-product representations.

#include "phif/config.hpp"
#include "phif/cplx.hpp"
#include "phif/eval.hpp"
#include "phif/hadamard.hpp"
#include "phif/io.hpp"
#include "phif/precision.hpp"
#include "phif/quadfield.hpp"
#include "phif/signseq.hpp"
#include "phif/taylor.hpp"
#include "phif/verify.hpp"
#include "phif/zeros.hpp"
