#pragma once

// Umbrella header: the Laplace (subset-sum) transform on union-closed set
// families, its alternating-sum point inverse, and the difference-operator
// inverse over clopen base sets of the finite Stone-type topology, plus
// exact rationals, brute-force oracles, and problem-file I/O.

#include "semilat/errors.hpp"
#include "semilat/ground.hpp"
#include "semilat/inversion.hpp"
#include "semilat/oracle.hpp"
#include "semilat/problem_io.hpp"
#include "semilat/rational.hpp"
#include "semilat/semicharacter.hpp"
#include "semilat/sieve.hpp"
#include "semilat/stone.hpp"
#include "semilat/transform.hpp"
