#include "permlab/lw.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace permlab {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
        if (e & 1) r = r * b % kPrime;
    return r;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        std::uint64_t inv = pow_mod(a[rank * cols + c], kPrime - 2);
        for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * inv % kPrime;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t f = a[i * cols + c];
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = (a[i * cols + j] + (kPrime - f) * a[rank * cols + j]) % kPrime;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(ExactMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(rank, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::uint64_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<PointSet> colex_subsets(std::size_t n, std::size_t k) {
    if (k > n) fail(ErrorKind::OutOfRange, "subset size exceeds degree");
    if (n > 30) fail(ErrorKind::CapExceeded, "colex enumeration limited to degree 30");
    std::vector<PointSet> out;
    if (k == 0) return {PointSet{}};
    // increasing bitmasks of popcount k are exactly colex order
    std::uint64_t m = (std::uint64_t(1) << k) - 1, limit = std::uint64_t(1) << n;
    while (m < limit) {
        PointSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1) s.push_back(static_cast<Point>(i));
        out.push_back(std::move(s));
        std::uint64_t c = m & (~m + 1), r = m + c;  // next bitmask with the same popcount
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

std::size_t colex_rank(const PointSet& s) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom(static_cast<std::size_t>(s[i]), i + 1);
    return r;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows) fail(ErrorKind::DegreeMismatch, "matrix shapes do not match");
    ExactMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

ExactMatrix build_r_matrix(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) fail(ErrorKind::OutOfRange, "r-matrix needs 1 <= k <= n");
    auto rows = colex_subsets(n, k);
    ExactMatrix m(rows.size(), binom(n, k - 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t drop = 0; drop < k; ++drop) {
            PointSet d = rows[i];
            d.erase(d.begin() + static_cast<std::ptrdiff_t>(drop));
            m.at(i, colex_rank(d)) = 1;
        }
    return m;
}

std::size_t rank(const ExactMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    bool integral = true;
    std::vector<std::uint64_t> red(m.entries.size());
    for (std::size_t i = 0; i < m.entries.size() && integral; ++i) {
        const Rational& e = m.entries[i];
        if (boost::multiprecision::denominator(e) != 1) {
            integral = false;
            break;
        }
        BigInt v = boost::multiprecision::numerator(e) % BigInt(kPrime);
        if (v < 0) v += kPrime;
        red[i] = static_cast<std::uint64_t>(v);
    }
    if (integral) {
        // rank mod p never exceeds rank over Q, so a full rank mod p is exact
        std::size_t rp = rank_mod_p(std::move(red), m.rows, m.cols);
        if (rp == std::min(m.rows, m.cols)) return rp;
    }
    return rank_exact(m);
}

ExactMatrix subset_permutation_matrix(const Perm& g, std::size_t k) {
    auto subs = colex_subsets(g.degree(), k);
    ExactMatrix p(subs.size(), subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) p.at(i, colex_rank(image_of(subs[i], g))) = 1;
    return p;
}

bool r_matrix_equivariant(const Perm& g, std::size_t k) {
    // P_k(g) r = r P_(k-1)(g), compared as index maps to avoid dense products
    const std::size_t n = g.degree();
    auto rows = colex_subsets(n, k);
    auto cols = colex_subsets(n, k - 1);
    ExactMatrix r = build_r_matrix(n, k);
    std::vector<std::size_t> pk(rows.size()), pk1(cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) pk[i] = colex_rank(image_of(rows[i], g));
    for (std::size_t j = 0; j < cols.size(); ++j) pk1[j] = colex_rank(image_of(cols[j], g));
    // (P_k r)[i, j] = r[pk[i], j];  (r P_(k-1))[i, j] = sum_l r[i, l] P[l, j] = r[i, l] with pk1[l] = j
    std::vector<std::size_t> inv1(cols.size());
    for (std::size_t l = 0; l < cols.size(); ++l) inv1[pk1[l]] = l;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (r.at(pk[i], j) != r.at(i, inv1[j])) return false;
    return true;
}

OrbitCountReport orbit_count_inequality(const Group& g, std::size_t kmax, std::size_t burnside_limit,
                                        std::size_t cap) {
    const std::size_t n = g.degree();
    if (kmax > n) fail(ErrorKind::OutOfRange, "kmax exceeds the degree");
    OrbitCountReport r;
    for (std::size_t k = 0; k <= kmax; ++k) r.counts.push_back(k == 0 ? 1 : count_orbits(g, InducedKind::Subsets, k, cap));
    for (std::size_t k = 1; k <= kmax; ++k)
        if (n >= 2 * k && r.counts[k - 1] > r.counts[k]) r.inequality_holds = false;
    for (std::size_t k = 1; k <= kmax; ++k)
        if (n >= 2 * k && r.counts[k] == 1)
            for (std::size_t m = 0; m < k; ++m)
                if (r.counts[m] != 1) r.single_orbit_propagates = false;

    r.burnside.assign(kmax + 1, std::nullopt);
    std::optional<std::size_t> order;
    try {
        order = g.order(burnside_limit);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
    }
    if (order) {
        // fixed k-subsets of g: coefficient of x^k in prod over cycles of (1 + x^len)
        std::vector<BigInt> total(kmax + 1, 0);
        for (const auto& x : g.elements(burnside_limit).list) {
            std::vector<BigInt> poly(kmax + 1, 0);
            poly[0] = 1;
            for (const auto& [len, mult] : cycle_type(x))
                for (std::size_t t = 0; t < mult; ++t)
                    for (std::size_t d = kmax + 1; d-- > len;) poly[d] += poly[d - len];
            for (std::size_t k = 0; k <= kmax; ++k) total[k] += poly[k];
        }
        for (std::size_t k = 0; k <= kmax; ++k) {
            Rational avg(total[k], BigInt(*order));
            r.burnside[k] = avg;
            if (avg != Rational(BigInt(r.counts[k]))) r.burnside_agrees = false;
        }
    }
    return r;
}

ExactMatrix build_theta(std::size_t n, std::size_t r, std::size_t s) {
    if (r > s || s > n) fail(ErrorKind::OutOfRange, "theta needs r <= s <= n");
    auto ins = colex_subsets(n, r), outs = colex_subsets(n, s);
    if (ins.size() * outs.size() > 4'000'000) fail(ErrorKind::CapExceeded, "theta matrix too large");
    ExactMatrix m(outs.size(), ins.size());
    for (std::size_t i = 0; i < outs.size(); ++i)
        for (std::size_t j = 0; j < ins.size(); ++j) {
            PointSet both;
            std::set_intersection(outs[i].begin(), outs[i].end(), ins[j].begin(), ins[j].end(),
                                  std::back_inserter(both));
            m.at(i, j) = both.size() % 2 ? -1 : 1;
        }
    return m;
}

ThetaReport theta_exploration(std::size_t n, std::size_t r, std::size_t s, std::size_t t) {
    if (!(r <= s && s <= t && t <= n)) fail(ErrorKind::OutOfRange, "need 0 <= r <= s <= t <= n");
    ExactMatrix rs = build_theta(n, r, s), st = build_theta(n, s, t), rt = build_theta(n, r, t);
    ThetaReport rep;
    rep.rank_rs = rank(rs);
    rep.rank_st = rank(st);
    rep.rank_rt = rank(rt);
    // right actions compose left to right: f theta_rs theta_st is the column product st * rs
    ExactMatrix comp = multiply(st, rs);
    Rational lambda = comp.at(0, 0) / rt.at(0, 0);
    rep.proportional = true;
    for (std::size_t i = 0; i < comp.entries.size(); ++i)
        if (comp.entries[i] != lambda * rt.entries[i]) {
            rep.proportional = false;
            break;
        }
    if (rep.proportional) rep.lambda = lambda;
    return rep;
}

std::string to_csv(const ExactMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? "," : "") << to_string(m.at(i, j));
        os << "\n";
    }
    return os.str();
}

}  // namespace permlab
