#pragma once

// Cyclotomic alpha/beta data of a circuit tuple and the
// Corti-Golyshev-Fedorov coefficient formula for its local h*-vector;
// an independent oracle for the face-poset recursion.

#include "lstar/localh.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace lstar {

using Rat = boost::multiprecision::cpp_rational;

/// Root-of-unity exponents of prod_{g_i<0}(T^{-g_i}-1) / prod_{g_i>0}(T^{g_i}-1)
/// after full multiset cancellation, normalized into (0,1] (the root T=1
/// is exponent 1) and sorted ascending.
struct AlphaBeta {
    std::vector<Rat> alphas;  // from the negative entries
    std::vector<Rat> betas;   // from the positive entries
    std::size_t K = 0;
    int m_minus = 0;  // number of negative gamma entries
};

AlphaBeta alphas_betas(const std::vector<Int>& gamma);

/// Local h*-vector of the circuit of gamma via the coefficient formula
///   l*_r = #{ j : #{ i : alpha_i <= beta_j } - j + m_minus = r }.
/// A computed index outside 1..d is a hard error.
LocalHStar cgf_local_hstar(const std::vector<Int>& gamma);

}  // namespace lstar
