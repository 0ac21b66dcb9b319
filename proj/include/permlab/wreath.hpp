#pragma once

#include <string>
#include <vector>

#include "permlab/congruence.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Points of Gamma x Delta are linearized delta-major: (gamma, delta) -> delta * |Gamma| + gamma.
inline Point product_point(std::size_t gamma_size, Point gamma, Point delta) {
    return delta * static_cast<Point>(gamma_size) + gamma;
}

// Base group: one copy of every A-generator per delta, then the top copies of B.
Group wreath(const Group& a, const Group& b);
BigInt wreath_order(const Group& a, const Group& b, std::size_t cap = default_cap());

// Fiber partition {Gamma x {delta}} of the product domain.
Partition fiber_partition(std::size_t gamma_size, std::size_t delta_size);

// Variation I. b_delta and b_phi carry the same generator list, acting on Delta and Phi;
// pi maps Delta to Phi and must commute with every generator.
Group wreath_variation1(const Group& a, const Group& b_delta, const Group& b_phi, const std::vector<Point>& pi);

struct Poset {
    std::vector<std::vector<bool>> leq;  // leq[i][j] iff i <= j
    std::size_t size() const { return leq.size(); }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
    static Poset chain(std::size_t k);
    static Poset antichain(std::size_t k);
};
void validate_poset(const Poset& p);

// Coordinates of a point of the full product, coordinate 0 least significant.
std::vector<Point> product_coords(const std::vector<std::size_t>& sizes, Point p);
Point product_index(const std::vector<std::size_t>& sizes, const std::vector<Point>& coords);

// Generalized wreath over a finite poset: coordinate i is moved by H_i depending on the
// coordinates strictly above i. Base points are point 0 of each component; at finite scale
// every tuple is in the restricted product, so the base points do not cut the domain.
Group generalized_wreath(const Poset& poset, const std::vector<Group>& components,
                         std::size_t cap = default_cap());

struct HallTower {
    Group group;
    // for each split k (1 <= k < n): tower(H_1..H_k) Wr tower(H_k+1..H_n) equals the whole tower
    std::vector<bool> sections_ok;
    bool all_sections_ok() const;
};
HallTower hall_tower(const std::vector<Group>& chain, std::size_t cap = default_cap());

// Same permutation group: equal degree and each generator set lies in the other group.
bool permutation_equal(const Group& x, const Group& y, std::size_t cap = default_cap());

struct EmbeddingReport {
    std::vector<Point> phi;  // omega -> point of Gamma x Delta
    Group a;                 // setwise stabilizer of the block of 0, acting on that block
    Group b;                 // action on the blocks
    std::vector<Perm> psi_generators;
    bool compatible = false;  // (omega g) phi = (omega phi)(g psi) for every omega and generator
    bool injective = false;
    bool image_in_wreath = false;
    std::size_t image_order = 0;
    BigInt wreath_order = 0;
    BigInt index = 0;
};
EmbeddingReport imprimitive_embedding(const Group& g, const Partition& rho, std::size_t cap = default_cap());

// JSON description of a wreath construction; rebuilding yields identical generators.
struct WreathSpec {
    std::string kind;  // "wreath", "variation1", "generalized", "hall"
    std::vector<Group> factors;
    Poset poset;
    std::vector<Point> pi;   // variation1 only
    std::size_t phi_size = 0;
    std::vector<Perm> phi_generators;  // variation1 only: B acting on Phi
};
std::string to_json(const WreathSpec& s);
WreathSpec wreath_spec_from_json(const std::string& text);
Group build(const WreathSpec& s, std::size_t cap = default_cap());

}  // namespace permlab
