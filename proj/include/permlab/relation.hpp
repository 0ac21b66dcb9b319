#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

using Tuple = std::vector<Point>;

// Explicit k-ary relation on {0..n-1}, stored as a dense membership table.
class RelationK {
public:
    RelationK() = default;
    RelationK(std::size_t arity, std::size_t n);

    std::size_t arity() const { return arity_; }
    std::size_t domain_size() const { return n_; }
    bool has(const Tuple& t) const { return table_[index(t)] != 0; }
    bool has(std::initializer_list<Point> t) const { return has(Tuple(t)); }
    void insert(const Tuple& t);
    void erase(const Tuple& t);
    std::size_t size() const { return count_; }

    // Sorted lexicographically.
    std::vector<Tuple> tuples() const;
    // Relabel through f: t in R iff t^f in the result.
    RelationK relabel(const Perm& f) const;
    // Restriction to the points of delta, renumbered 0..|delta|-1 in increasing order.
    RelationK restrict_to(const PointSet& delta) const;

    bool operator==(const RelationK& o) const = default;

private:
    std::size_t index(const Tuple& t) const;
    std::size_t arity_ = 0, n_ = 0, count_ = 0;
    std::vector<std::uint8_t> table_;
};

// JSON array of arrays, 1-based points, sorted.
std::string to_json_text(const RelationK& r);

}  // namespace permlab
