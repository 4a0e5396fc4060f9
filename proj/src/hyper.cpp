#include "lstar/hyper.hpp"

#include <algorithm>

namespace lstar {

namespace {

void check_gamma(const std::vector<Int>& gamma) {
    if (gamma.size() < 3) throw std::invalid_argument("gamma: need at least 3 entries");
    Int sum = 0;
    for (const Int& g : gamma) {
        if (g == 0) throw std::invalid_argument("gamma: zero entry");
        sum += g;
    }
    if (sum != 0) throw std::invalid_argument("gamma: entries must sum to zero");
    if (vec_gcd(gamma) != 1) throw std::invalid_argument("gamma: gcd must be 1");
}

}  // namespace

AlphaBeta alphas_betas(const std::vector<Int>& gamma) {
    check_gamma(gamma);
    std::vector<Rat> num, den;
    int m_minus = 0;
    for (const Int& g : gamma) {
        if (g < 0) {
            ++m_minus;
            Int a = -g;
            for (Int j = 1; j <= a; ++j) num.emplace_back(j, a);
        } else {
            for (Int j = 1; j <= g; ++j) den.emplace_back(j, g);
        }
    }
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());

    // cancel common roots as multisets
    AlphaBeta ab;
    std::size_t i = 0, j = 0;
    while (i < num.size() && j < den.size()) {
        if (num[i] == den[j]) {
            ++i;
            ++j;
        } else if (num[i] < den[j]) {
            ab.alphas.push_back(num[i++]);
        } else {
            ab.betas.push_back(den[j++]);
        }
    }
    ab.alphas.insert(ab.alphas.end(), num.begin() + i, num.end());
    ab.betas.insert(ab.betas.end(), den.begin() + j, den.end());
    if (ab.alphas.size() != ab.betas.size())
        throw std::logic_error("alphas_betas: unbalanced tuples");
    ab.K = ab.alphas.size();
    ab.m_minus = m_minus;
    return ab;
}

LocalHStar cgf_local_hstar(const std::vector<Int>& gamma) {
    AlphaBeta ab = alphas_betas(gamma);
    const int d = static_cast<int>(gamma.size()) - 2;
    if (d < 1) throw std::invalid_argument("cgf_local_hstar: need length >= 3");

    std::vector<Int> lstar(d);
    for (std::size_t j = 1; j <= ab.K; ++j) {
        const Rat& beta = ab.betas[j - 1];
        std::size_t below = 0;
        for (const Rat& a : ab.alphas)
            if (a <= beta) ++below;
        long long r = static_cast<long long>(below) - static_cast<long long>(j) + ab.m_minus;
        if (r < 1 || r > d)
            throw std::logic_error("cgf_local_hstar: coefficient index out of range");
        lstar[r - 1] += 1;
    }

    LocalHStar out;
    out.dim = d;
    out.lstar = std::move(lstar);
    out.hodge = hodge_vector(out.lstar);
    for (int i = 1; i <= d; ++i)
        if (out.lstar[i - 1] != out.lstar[d - i])
            throw std::logic_error("cgf_local_hstar: palindromicity violated");
    return out;
}

}  // namespace lstar
