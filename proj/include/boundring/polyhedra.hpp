#pragma once

// Exact rational polyhedral cone engine: double description between the two
// representations, duality, Hilbert bases, and feasibility of half-space
// systems with multiplicative right-hand sides.

#include "boundring/algebra.hpp"
#include "boundring/intlinalg.hpp"
#include "boundring/numeric.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace boundring {

namespace detail {

struct DDRay {
    VecI v;
    std::set<int> active;  // indices of processed constraints tight on this ray
};

struct DDResult {
    std::vector<VecI> rays;
    std::vector<VecI> lineality;
};

// Double description for {x : <a,x> <= 0 for all a in normals}, starting from
// the full space. Lineality is split off explicitly; adjacency of rays is
// decided by the active-set containment test.
inline DDResult doubleDescription(int n, const std::vector<VecI>& normals) {
    std::vector<VecI> lineality;
    for (int i = 0; i < n; ++i) {
        VecI e(n, 0);
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<DDRay> rays;

    int processed = 0;
    for (const VecI& a0 : normals) {
        VecI a = primitive(a0);
        if (isZero(a)) continue;
        const int k = processed++;

        // pivot a lineality vector that is not orthogonal to a
        int pivot = -1;
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot >= 0) {
            VecI l = lineality[pivot];
            Int s = dot(a, l);
            if (s > 0) {
                l = negated(l);
                s = -s;
            }
            std::vector<VecI> newLin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (static_cast<int>(i) == pivot) continue;
                const VecI& m = lineality[i];
                Int t = dot(a, m);
                // s*m - t*l is orthogonal to a; any nonzero scale works
                newLin.push_back(primitive(sub(scaled(m, s), scaled(l, t))));
            }
            lineality = std::move(newLin);
            for (DDRay& r : rays) {
                Int t = dot(a, r.v);
                // (-s)*r + t*l is a positive rescaling of r shifted into <a,.> = 0
                r.v = primitive(add(scaled(r.v, -s), scaled(l, t)));
                r.active.insert(k);
            }
            DDRay nr;
            nr.v = l;
            for (int j = 0; j < k; ++j) nr.active.insert(j);
            rays.push_back(std::move(nr));
            // projection can merge rays that differed only along the pivot
            std::sort(rays.begin(), rays.end(),
                      [](const DDRay& x, const DDRay& y) { return lexLess(x.v, y.v); });
            rays.erase(std::unique(rays.begin(), rays.end(),
                                   [](const DDRay& x, const DDRay& y) { return x.v == y.v; }),
                       rays.end());
            continue;
        }

        // lineality entirely inside the hyperplane: classic DD step on rays
        std::vector<Int> t(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) t[i] = dot(a, rays[i].v);
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (t[i] > 0) continue;
            DDRay keep = rays[i];
            if (t[i] == 0) keep.active.insert(k);
            next.push_back(std::move(keep));
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (t[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (t[j] >= 0) continue;
                std::set<int> common;
                std::set_intersection(rays[i].active.begin(), rays[i].active.end(),
                                      rays[j].active.begin(), rays[j].active.end(),
                                      std::inserter(common, common.begin()));
                bool adjacent = true;
                for (std::size_t h = 0; h < rays.size(); ++h) {
                    if (h == i || h == j) continue;
                    if (std::includes(rays[h].active.begin(), rays[h].active.end(),
                                      common.begin(), common.end())) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                DDRay nr;
                nr.v = primitive(sub(scaled(rays[j].v, t[i]), scaled(rays[i].v, t[j])));
                nr.active = common;
                nr.active.insert(k);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        // dedupe identical primitive rays
        std::sort(rays.begin(), rays.end(),
                  [](const DDRay& x, const DDRay& y) { return lexLess(x.v, y.v); });
        rays.erase(std::unique(rays.begin(), rays.end(),
                               [](const DDRay& x, const DDRay& y) { return x.v == y.v; }),
                   rays.end());
    }

    DDResult out;
    for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end(), lexLess);
    // echelonize the lineality basis for determinism
    if (!lineality.empty()) {
        std::vector<std::vector<Rat>> m;
        for (const auto& v : lineality) {
            std::vector<Rat> row;
            for (const Int& x : v) row.emplace_back(x);
            m.push_back(std::move(row));
        }
        std::size_t rows = m.size(), cols = m[0].size(), rr = 0;
        for (std::size_t c = 0; c < cols && rr < rows; ++c) {
            std::size_t piv = rr;
            while (piv < rows && m[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(m[rr], m[piv]);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rr || m[r][c] == 0) continue;
                Rat f = m[r][c] / m[rr][c];
                for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rr][j];
            }
            ++rr;
        }
        for (std::size_t r = 0; r < rr; ++r) {
            Int lcm = 1;
            for (const Rat& x : m[r])
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
            VecI v(cols);
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = boost::multiprecision::numerator(Rat(m[r][j] * lcm));
            v = primitive(v);
            // sign convention: first nonzero entry positive
            for (const Int& x : v) {
                if (x == 0) continue;
                if (x < 0) v = negated(v);
                break;
            }
            out.lineality.push_back(std::move(v));
        }
        std::sort(out.lineality.begin(), out.lineality.end(), lexLess);
    }
    return out;
}

}  // namespace detail

// Rational polyhedral cone with both representations over exact integers.
// The half-space meaning is {d : <a,d> <= 0 for every a in normals}.
struct LatticeCone {
    int n = 0;
    std::vector<VecI> rays;       // extreme rays modulo lineality, primitive
    std::vector<VecI> lineality;  // echelon basis of the lineality space
    std::vector<VecI> normals;    // minimal half-space description

    std::vector<VecI> generators() const {
        std::vector<VecI> g = rays;
        for (const VecI& l : lineality) {
            g.push_back(l);
            g.push_back(negated(l));
        }
        return g;
    }

    bool contains(const VecI& v) const {
        for (const VecI& a : normals)
            if (dot(a, v) > 0) return false;
        return true;
    }

    bool isZeroCone() const { return rays.empty() && lineality.empty(); }

    bool operator==(const LatticeCone& o) const {
        return n == o.n && rays == o.rays && lineality == o.lineality;
    }

    static LatticeCone fromHalfspaces(int n, const std::vector<VecI>& normals) {
        LatticeCone c;
        c.n = n;
        auto dd = detail::doubleDescription(n, normals);
        c.rays = dd.rays;
        c.lineality = dd.lineality;
        // minimal H-representation = generators of the dual cone
        auto dual = detail::doubleDescription(n, c.generators());
        c.normals = dual.rays;
        for (const VecI& l : dual.lineality) {
            c.normals.push_back(l);
            c.normals.push_back(negated(l));
        }
        std::sort(c.normals.begin(), c.normals.end(), lexLess);

        // canonicalize rays modulo lineality and drop any non-extreme ones:
        // a ray is extreme iff its active constraints cut a face of dimension
        // dim(lineality) + 1, i.e. their rank is n - dim(lineality) - 1
        const int linDim = static_cast<int>(c.lineality.size());
        std::vector<VecI> cleaned;
        for (const VecI& r0 : c.rays) {
            std::vector<Rat> r(n);
            for (int i = 0; i < n; ++i) r[i] = Rat(r0[i]);
            for (const VecI& l : c.lineality) {
                int piv = 0;
                while (l[piv] == 0) ++piv;
                Rat f = r[piv] / Rat(l[piv]);
                for (int i = 0; i < n; ++i) r[i] -= f * Rat(l[i]);
            }
            Int lcm = 1;
            for (const Rat& x : r)
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
            VecI v(n);
            for (int i = 0; i < n; ++i)
                v[i] = boost::multiprecision::numerator(Rat(r[i] * lcm));
            v = primitive(v);
            if (isZero(v)) continue;
            std::vector<VecI> active;
            for (const VecI& a : c.normals)
                if (dot(a, v) == 0) active.push_back(a);
            if (latticeRank(active) == n - linDim - 1) cleaned.push_back(std::move(v));
        }
        std::sort(cleaned.begin(), cleaned.end(), lexLess);
        cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
        c.rays = std::move(cleaned);
        return c;
    }

    static LatticeCone fromGenerators(int n, const std::vector<VecI>& gens) {
        std::vector<VecI> clean;
        for (const VecI& g : gens) {
            VecI p = primitive(g);
            if (!isZero(p)) clean.push_back(std::move(p));
        }
        auto dual = detail::doubleDescription(n, clean);
        std::vector<VecI> normals = dual.rays;
        for (const VecI& l : dual.lineality) {
            normals.push_back(l);
            normals.push_back(negated(l));
        }
        return fromHalfspaces(n, normals);
    }
};

inline LatticeCone dualCone(const LatticeCone& c) {
    return LatticeCone::fromHalfspaces(c.n, c.generators());
}

inline LatticeCone minkowskiSum(const LatticeCone& a, const LatticeCone& b) {
    if (a.n != b.n) throw std::invalid_argument("minkowskiSum: dimension mismatch");
    std::vector<VecI> g = a.generators();
    for (const VecI& v : b.generators()) g.push_back(v);
    return LatticeCone::fromGenerators(a.n, g);
}

inline LatticeCone intersect(const LatticeCone& a, const LatticeCone& b) {
    if (a.n != b.n) throw std::invalid_argument("intersect: dimension mismatch");
    std::vector<VecI> h = a.normals;
    for (const VecI& v : b.normals) h.push_back(v);
    return LatticeCone::fromHalfspaces(a.n, h);
}

inline int coneDimension(const LatticeCone& c) {
    return latticeRank(c.generators());
}

// Sum of the extreme-ray generators, a relative-interior lattice point.
// Cones that are pure lineality get the origin; the zero cone gets nothing.
inline std::optional<VecI> relativeInteriorPoint(const LatticeCone& c) {
    if (c.isZeroCone()) return std::nullopt;
    VecI p(c.n, 0);
    for (const VecI& r : c.rays) p = add(p, r);
    return p;
}

// Rows mean <a,u> <= log C with C a positive rational.
struct MultiplicativeSystem {
    struct Row {
        VecI a;
        Rat bound;  // C > 0
    };
    int n = 0;
    std::vector<Row> rows;
};

enum class SystemClass { infeasible, lower_dimensional, full_dimensional };

// Exact classification of {u : <a_i,u> <= log C_i}. By LP duality the system
// is infeasible iff some extreme ray lambda >= 0 of {lambda : sum lambda_i a_i = 0}
// has product C^lambda < 1; an implicit equality (product exactly 1) makes the
// polyhedron lower-dimensional. The rational power comparison avoids logs.
inline SystemClass classifySystem(const MultiplicativeSystem& sys) {
    std::vector<VecI> as;
    std::vector<Rat> cs;
    for (const auto& row : sys.rows) {
        if (row.bound <= 0)
            throw std::invalid_argument("classifySystem: bound must be positive");
        if (isZero(row.a)) {
            if (row.bound < 1) return SystemClass::infeasible;
            continue;
        }
        as.push_back(row.a);
        cs.push_back(row.bound);
    }
    const int m = static_cast<int>(as.size());
    if (m == 0) return SystemClass::full_dimensional;

    // cone {lambda >= 0 : sum lambda_i a_i = 0} in R^m
    std::vector<VecI> normals;
    for (int i = 0; i < m; ++i) {
        VecI e(m, 0);
        e[i] = -1;
        normals.push_back(e);
    }
    for (int j = 0; j < sys.n; ++j) {
        VecI row(m);
        for (int i = 0; i < m; ++i) row[i] = as[i][j];
        normals.push_back(row);
        normals.push_back(negated(row));
    }
    auto dd = detail::doubleDescription(m, normals);

    bool lowerDim = false;
    for (const VecI& lambda : dd.rays) {
        int cmp = compareProductPowersToOne(cs, lambda);
        if (cmp < 0) return SystemClass::infeasible;
        if (cmp == 0) lowerDim = true;
    }
    return lowerDim ? SystemClass::lower_dimensional : SystemClass::full_dimensional;
}

inline bool feasible(const MultiplicativeSystem& sys) {
    return classifySystem(sys) != SystemClass::infeasible;
}

struct HilbertBasis {
    std::vector<Exponent> elements;  // graded-lex order
    int rank = 0;

    bool operator==(const HilbertBasis& o) const {
        return elements == o.elements && rank == o.rank;
    }
};

class HilbertCapExceeded : public std::runtime_error {
public:
    explicit HilbertCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline Int det2(const VecI& u, const VecI& w) { return u[0] * w[1] - u[1] * w[0]; }

// Hilbert basis of a pointed 2D cone by walking the boundary of the convex
// hull of its nonzero lattice points (continued-fraction steps).
inline std::vector<VecI> hilbert2D(VecI u, VecI w) {
    if (det2(u, w) < 0) std::swap(u, w);
    std::vector<VecI> basis{u};
    VecI cur = u;
    while (det2(cur, w) > 1) {
        // v0 with det(cur, v0) = 1 via extended gcd on the primitive cur
        Int g, p, q;
        {
            // solve cur[0]*q - cur[1]*p = 1
            Int a = cur[0], b = -cur[1];
            // extended gcd of (a, b): find s,t with a*s + b*t = 1
            Int s0 = 1, t0 = 0, s1 = 0, t1 = 1, r0 = a, r1 = b;
            while (r1 != 0) {
                Int qq = r0 / r1;
                Int r2 = r0 - qq * r1;
                Int s2 = s0 - qq * s1;
                Int t2 = t0 - qq * t1;
                r0 = r1; r1 = r2;
                s0 = s1; s1 = s2;
                t0 = t1; t1 = t2;
            }
            if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
            g = r0;  // gcd == 1 since cur is primitive
            q = s0;  // coefficient of cur[0]
            p = t0;  // coefficient of -cur[1]
        }
        if (g != 1) throw std::logic_error("hilbert2D: non-primitive ray");
        VecI v0{p, q};
        // smallest t with det(v0 + t*cur, w) >= 0
        Int d = det2(cur, w);
        Int num = -det2(v0, w);
        Int t = num / d;
        if (t * d < num) ++t;  // ceiling for positive d
        VecI v = add(v0, scaled(cur, t));
        basis.push_back(v);
        cur = v;
    }
    if (cur != w) basis.push_back(w);
    return basis;
}

}  // namespace detail

// Hilbert basis of the monoid (cone ∩ Z^n) for a cone inside the nonnegative
// orthant. Planar cones use the boundary continued-fraction walk; higher
// dimensions fall back to degree-capped enumeration with greedy reduction.
inline HilbertBasis hilbertBasis(const LatticeCone& c, long long degreeCap = 64) {
    for (const VecI& g : c.generators())
        for (const Int& x : g)
            if (x < 0)
                throw std::invalid_argument("hilbertBasis: cone not inside the nonnegative orthant");
    // inside the orthant the cone is automatically pointed
    HilbertBasis out;
    std::vector<VecI> elems;
    if (c.rays.empty()) {
        // zero cone
    } else if (c.rays.size() == 1) {
        elems.push_back(c.rays[0]);
    } else if (c.n == 2 && c.rays.size() == 2) {
        elems = detail::hilbert2D(c.rays[0], c.rays[1]);
    } else {
        // completion-style saturation: every Hilbert basis element lies in a
        // fundamental domain of the extreme rays, bounding its total degree
        Int bound = 0;
        for (const VecI& r : c.rays)
            for (const Int& x : r) bound += x;
        if (bound > degreeCap)
            throw HilbertCapExceeded("hilbertBasis: degree bound " + bound.str() +
                                     " exceeds cap " + std::to_string(degreeCap));
        long long D = static_cast<long long>(bound);
        std::vector<VecI> points;
        VecI cursor(c.n, 0);
        auto enumerate = [&](auto&& self, int idx, long long remaining) -> void {
            if (idx == c.n) {
                if (!isZero(cursor) && c.contains(cursor)) points.push_back(cursor);
                return;
            }
            for (long long v = 0; v <= remaining; ++v) {
                cursor[idx] = v;
                self(self, idx + 1, remaining - v);
            }
            cursor[idx] = 0;
        };
        enumerate(enumerate, 0, D);
        std::sort(points.begin(), points.end(), [](const VecI& a, const VecI& b) {
            Int da = 0, db = 0;
            for (const Int& x : a) da += x;
            for (const Int& x : b) db += x;
            if (da != db) return da < db;
            return lexLess(a, b);
        });
        for (const VecI& p : points) {
            bool reducible = false;
            for (const VecI& b : elems) {
                VecI r = sub(p, b);
                bool nonneg = std::all_of(r.begin(), r.end(), [](const Int& x) { return x >= 0; });
                if (nonneg && !isZero(r) && c.contains(r)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) elems.push_back(p);
        }
    }
    for (const VecI& e : elems) {
        Exponent x(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) x[i] = static_cast<long long>(e[i]);
        out.elements.push_back(std::move(x));
    }
    std::sort(out.elements.begin(), out.elements.end(), GradedLexLess{});
    std::vector<VecI> vecs;
    for (const auto& e : out.elements) vecs.push_back(toVecI(e));
    out.rank = latticeRank(vecs);
    return out;
}

}  // namespace boundring
