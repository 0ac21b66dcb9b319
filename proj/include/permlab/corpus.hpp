#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

struct GeometryTable {
    std::string kind;  // "projective" or "affine"
    int q = 0;
    std::vector<std::string> coordinates;  // one per point
    std::vector<PointSet> lines;           // 0-based, sorted
};

struct Fixture {
    std::string name;
    std::string family;  // cyclic, dihedral, symmetric, alternating, regular, wreath, geometry
    std::size_t degree = 0;
    std::vector<std::string> generators;  // 1-based cycle notation
    std::size_t order = 0;  // expected order, tabulated independently of the closure
    std::string provenance;
    bool enumerable = true;  // order within the default cap
    std::optional<GeometryTable> geometry;
};

const std::vector<Fixture>& corpus();
const Fixture& fixture(const std::string& name);  // throws UnknownFixture
Group fixture_group(const Fixture& f);

// Proper subspaces of a geometry fixture: empty set, points, lines.
std::vector<PointSet> proper_subspaces(const GeometryTable& t);

}  // namespace permlab
