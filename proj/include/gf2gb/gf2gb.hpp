#pragma once

#include "gf2gb/buchberger.hpp"
#include "gf2gb/critical_pairs.hpp"
#include "gf2gb/f4.hpp"
#include "gf2gb/generators.hpp"
#include "gf2gb/gf2_matrix.hpp"
#include "gf2gb/gf2n.hpp"
#include "gf2gb/history.hpp"
#include "gf2gb/middle_solving.hpp"
#include "gf2gb/monomial.hpp"
#include "gf2gb/polynomial.hpp"
#include "gf2gb/problem_io.hpp"
#include "gf2gb/ring.hpp"
#include "gf2gb/stats.hpp"
