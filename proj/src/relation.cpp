#include "permlab/relation.hpp"

#include <sstream>

#include "permlab/errors.hpp"

namespace permlab {

namespace {
constexpr std::size_t kTableLimit = std::size_t(1) << 26;
}

RelationK::RelationK(std::size_t arity, std::size_t n) : arity_(arity), n_(n) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        cells *= std::max<std::size_t>(n, 1);
        if (cells > kTableLimit) fail(ErrorKind::CapExceeded, "relation table too large");
    }
    table_.assign(cells, 0);
}

std::size_t RelationK::index(const Tuple& t) const {
    if (t.size() != arity_) fail(ErrorKind::ArityMismatch, "tuple length differs from arity");
    std::size_t i = 0;
    for (Point p : t) {
        if (p < 0 || static_cast<std::size_t>(p) >= n_) fail(ErrorKind::PointOutOfRange, "tuple entry outside domain");
        i = i * n_ + static_cast<std::size_t>(p);
    }
    return i;
}

void RelationK::insert(const Tuple& t) {
    auto& c = table_[index(t)];
    if (!c) ++count_;
    c = 1;
}

void RelationK::erase(const Tuple& t) {
    auto& c = table_[index(t)];
    if (c) --count_;
    c = 0;
}

std::vector<Tuple> RelationK::tuples() const {
    std::vector<Tuple> out;
    if (n_ == 0) return out;
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (!table_[i]) continue;
        Tuple t(arity_);
        std::size_t x = i;
        for (std::size_t j = arity_; j-- > 0; x /= n_) t[j] = static_cast<Point>(x % n_);
        out.push_back(std::move(t));
    }
    return out;
}

RelationK RelationK::relabel(const Perm& f) const {
    if (f.degree() != n_) fail(ErrorKind::DegreeMismatch, "relabeling degree differs from domain");
    RelationK out(arity_, n_);
    for (auto t : tuples()) {
        for (auto& p : t) p = f.image(p);
        out.insert(t);
    }
    return out;
}

RelationK RelationK::restrict_to(const PointSet& delta) const {
    std::vector<Point> pos(n_, -1);
    for (std::size_t i = 0; i < delta.size(); ++i) pos[static_cast<std::size_t>(delta[i])] = static_cast<Point>(i);
    RelationK out(arity_, delta.size());
    for (auto t : tuples()) {
        bool inside = true;
        for (auto& p : t) {
            p = pos[static_cast<std::size_t>(p)];
            if (p < 0) inside = false;
        }
        if (inside) out.insert(t);
    }
    return out;
}

std::string to_json_text(const RelationK& r) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& t : r.tuples()) {
        os << (first ? "" : ",") << "[";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
        os << "]";
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace permlab
