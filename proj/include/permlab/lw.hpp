#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/group.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// k-subsets of {0..n-1} in colex order (by largest element, then the next largest, ...).
std::vector<PointSet> colex_subsets(std::size_t n, std::size_t k);
std::size_t colex_rank(const PointSet& s);

struct ExactMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> entries;  // row-major
    ExactMatrix() = default;
    ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

// Rows: k-subsets Gamma; columns: (k-1)-subsets Delta; entry 1 iff Delta lies in Gamma.
ExactMatrix build_r_matrix(std::size_t n, std::size_t k);

// Exact rank over Q. Integer matrices first try elimination mod a prime: full rank there is
// full rank over Q. Otherwise fraction-free elimination over the integers / rationals.
std::size_t rank(const ExactMatrix& m);

// P_k(g)[Gamma, Gamma'] = 1 iff Gamma' = Gamma g.
ExactMatrix subset_permutation_matrix(const Perm& g, std::size_t k);
bool r_matrix_equivariant(const Perm& g, std::size_t k);

struct OrbitCountReport {
    std::vector<std::size_t> counts;  // #Orb on k-subsets, k = 0..kmax
    std::vector<std::optional<Rational>> burnside;  // average number of fixed k-subsets, when |G| is small
    bool inequality_holds = true;     // counts[k-1] <= counts[k] whenever n >= 2k
    bool burnside_agrees = true;
    bool single_orbit_propagates = true;  // counts[k] == 1 and n >= 2k imply counts[m] == 1 for m <= k
};
OrbitCountReport orbit_count_inequality(const Group& g, std::size_t kmax, std::size_t burnside_limit = 5000,
                                        std::size_t cap = default_cap());

// theta_rs[Sigma, Gamma] = (-1)^|Gamma n Sigma| for r-sets Gamma, s-sets Sigma.
ExactMatrix build_theta(std::size_t n, std::size_t r, std::size_t s);

struct ThetaReport {
    std::size_t rank_rs = 0, rank_st = 0, rank_rt = 0;
    bool proportional = false;  // theta_st * theta_rs = lambda theta_rt
    std::optional<Rational> lambda;
};
ThetaReport theta_exploration(std::size_t n, std::size_t r, std::size_t s, std::size_t t);

std::string to_csv(const ExactMatrix& m);

}  // namespace permlab
