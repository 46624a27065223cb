#include "zz/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zz {

Complex Complex::projective(const Algebra& alg, int vertex, int r, int s, int t) {
    Complex c(alg);
    c.add_gen({vertex, r, s, t});
    return c;
}

Complex Complex::sum_of_projectives(const Algebra& alg) {
    Complex c(alg);
    for (int j = 1; j <= alg.vertices(); ++j)
        c.add_gen({j, 0, 0, 0});
    return c;
}

int Complex::add_gen(const Gen& g) {
    if (alg_->tag() == AlgTag::A && g.t != 0)
        throw std::invalid_argument("type A has no <1> shift");
    gens_.push_back(g);
    return (int)gens_.size() - 1;
}

void Complex::add_diff(int from, int to, const Elem& e) {
    if (Algebra::is_zero(e))
        return;
    auto key = std::make_pair(from, to);
    auto it = diff_.find(key);
    if (it == diff_.end()) {
        diff_[key] = e;
    } else {
        it->second = Algebra::add(it->second, e);
        if (Algebra::is_zero(it->second))
            diff_.erase(it);
    }
}

Elem Complex::diff_entry(int from, int to) const {
    auto it = diff_.find({from, to});
    return it == diff_.end() ? Elem{} : it->second;
}

std::vector<Complex::Violation> Complex::check() const {
    std::vector<Violation> out;
    auto note = [&](const std::string& s) { out.push_back({s}); };
    for (const auto& [key, e] : diff_) {
        auto [from, to] = key;
        const Gen& g = gens_[from];
        const Gen& h = gens_[to];
        if (h.r != g.r + 1)
            note("entry does not raise cohomological degree by 1");
        auto hom = alg_->homogeneous(e, pl_);
        if (!hom) {
            note("entry not homogeneous: " + alg_->elem_name(e));
            continue;
        }
        if (hom->src != g.vertex || hom->tgt != h.vertex)
            note("entry endpoints mismatch: " + alg_->elem_name(e));
        if (hom->deg != g.s - h.s)
            note("entry degree != s(src) - s(tgt): " + alg_->elem_name(e));
        if (((hom->z2 - g.t + h.t) % 2 + 2) % 2 != 0)
            note("entry z2-degree mismatch: " + alg_->elem_name(e));
    }
    // d^2 = 0
    std::map<std::pair<int, int>, Elem> sq;
    for (const auto& [k1, e1] : diff_)
        for (const auto& [k2, e2] : diff_) {
            if (k1.second != k2.first)
                continue;
            auto key = std::make_pair(k1.first, k2.second);
            Elem prod = alg_->mul(e1, e2);
            if (Algebra::is_zero(prod))
                continue;
            auto it = sq.find(key);
            if (it == sq.end())
                sq[key] = prod;
            else {
                it->second = Algebra::add(it->second, prod);
                if (Algebra::is_zero(it->second))
                    sq.erase(it);
            }
        }
    for (const auto& [key, e] : sq) {
        std::ostringstream os;
        os << "d^2 != 0 from gen " << key.first << " to gen " << key.second << ": "
           << alg_->elem_name(e);
        note(os.str());
    }
    return out;
}

void Complex::assert_valid(const char* where) const {
    auto v = check();
    if (!v.empty())
        throw std::logic_error(std::string("invalid complex in ") + where + ": " +
                               v.front().what);
}

Complex Complex::shifted(int a, int b, int c) const {
    Complex out(*alg_, pl_);
    for (const Gen& g : gens_)
        out.gens_.push_back({g.vertex, g.r - a, g.s + b, (g.t + c) % 2});
    for (const auto& [key, e] : diff_)
        out.diff_[key] = (a % 2 == 0) ? e : Algebra::scale(Gauss(-1), e);
    return out;
}

Complex direct_sum(const Complex& x, const Complex& y) {
    if (x.alg_ != y.alg_ || x.pl_ != y.pl_)
        throw std::invalid_argument("direct_sum over different algebras");
    Complex out(*x.alg_, x.pl_);
    out.gens_ = x.gens_;
    out.gens_.insert(out.gens_.end(), y.gens_.begin(), y.gens_.end());
    out.diff_ = x.diff_;
    int off = (int)x.gens_.size();
    for (const auto& [key, e] : y.diff_)
        out.diff_[{key.first + off, key.second + off}] = e;
    return out;
}

std::vector<Gen> Complex::sorted_gens() const {
    std::vector<Gen> v = gens_;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Gen> Complex::iso_key_gens() const {
    std::vector<Gen> v = gens_;
    if (alg_->tag() == AlgTag::B)
        for (Gen& g : v)
            if (g.vertex >= 2)
                g.t = 0;
    std::sort(v.begin(), v.end());
    return v;
}

std::string Complex::describe() const {
    std::ostringstream os;
    for (int i = 0; i < (int)gens_.size(); ++i) {
        const Gen& g = gens_[i];
        os << i << ": P" << g.vertex << "[" << -g.r << "]{" << g.s << "}";
        if (alg_->tag() == AlgTag::B)
            os << "<" << g.t << ">";
        os << "\n";
    }
    for (const auto& [key, e] : diff_)
        os << "d(" << key.first << " -> " << key.second << ") = " << alg_->elem_name(e)
           << "\n";
    return os.str();
}

Complex mapping_cone(const ChainMap& f) {
    if (f.r0 != 0 || f.s0 != 0 || f.t0 != 0)
        throw std::invalid_argument("mapping_cone expects a degree-(0,0,0) map");
    const Complex& x = *f.src;
    const Complex& y = *f.dst;
    Complex out(x.algebra(), x.pl_mode());
    // X[1] block first, then Y.
    for (int i = 0; i < x.size(); ++i) {
        Gen g = x.gen(i);
        g.r -= 1;
        out.add_gen(g);
    }
    for (int i = 0; i < y.size(); ++i)
        out.add_gen(y.gen(i));
    int off = x.size();
    for (const auto& [key, e] : x.diff())
        out.add_diff(key.first, key.second, Algebra::scale(Gauss(-1), e));
    for (const auto& [key, e] : y.diff())
        out.add_diff(key.first + off, key.second + off, e);
    for (const auto& [key, e] : f.entries)
        out.add_diff(key.first, key.second + off, e);
    return out;
}

namespace {

// Invertible entries are c*e_j or c*ie_j; returns the inverse element.
std::optional<Elem> invert_entry(const Algebra& alg, const Elem& e) {
    if (e.size() != 1)
        return std::nullopt;
    auto [id, c] = *e.begin();
    const Path& p = alg.path(id);
    if (p.kind == PathKind::E)
        return alg.from_path(id, c.inv());
    if (p.kind == PathKind::IE)
        return alg.from_path(id, -(c.inv()));  // (c ie)^-1 = -c^-1 ie
    return std::nullopt;
}

}  // namespace

Complex minimize(const Complex& c) {
    // Work on index-stable structures, then compact.
    int n = c.size();
    std::vector<Gen> gens(c.gens());
    std::vector<char> alive(n, 1);
    std::map<std::pair<int, int>, Elem> d = c.diff();
    const Algebra& alg = c.algebra();

    auto entry = [&](int i, int j) -> Elem {
        auto it = d.find({i, j});
        return it == d.end() ? Elem{} : it->second;
    };
    auto set_entry = [&](int i, int j, const Elem& e) {
        if (Algebra::is_zero(e))
            d.erase({i, j});
        else
            d[{i, j}] = e;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        // Deterministic scan: lexicographic in (from, to).
        std::pair<int, int> pick{-1, -1};
        Elem inv;
        for (const auto& [key, e] : d) {
            if (!alive[key.first] || !alive[key.second])
                continue;
            auto iv = invert_entry(alg, e);
            if (iv) {
                pick = key;
                inv = *iv;
                break;
            }
        }
        if (pick.first < 0)
            break;
        progress = true;
        int g = pick.first, h = pick.second;
        // d'(x -> y) -= d(x -> h) inv d(g -> y)
        std::vector<std::pair<int, Elem>> into_h, out_g;
        for (const auto& [key, e] : d) {
            if (key.second == h && key.first != g && alive[key.first])
                into_h.push_back({key.first, e});
            if (key.first == g && key.second != h && alive[key.second])
                out_g.push_back({key.second, e});
        }
        for (const auto& [x, ex] : into_h)
            for (const auto& [y, ey] : out_g) {
                Elem corr = alg.mul(ex, alg.mul(inv, ey));
                Elem cur = entry(x, y);
                set_entry(x, y, Algebra::add(cur, Algebra::scale(Gauss(-1), corr)));
            }
        alive[g] = alive[h] = 0;
        for (auto it = d.begin(); it != d.end();) {
            if (it->first.first == g || it->first.second == g || it->first.first == h ||
                it->first.second == h)
                it = d.erase(it);
            else
                ++it;
        }
    }

    Complex out(alg, c.pl_mode());
    std::vector<int> remap(n, -1);
    for (int i = 0; i < n; ++i)
        if (alive[i])
            remap[i] = out.add_gen(gens[i]);
    for (const auto& [key, e] : d)
        out.add_diff(remap[key.first], remap[key.second], e);
    out.assert_valid("minimize");
    return out;
}

std::vector<ChainMap> chain_map_space(const Complex& x, const Complex& y, int r0, int s0,
                                      int t0) {
    const Algebra& alg = x.algebra();
    if (&alg != &y.algebra())
        throw std::invalid_argument("chain maps need a common algebra");
    bool pl = x.pl_mode();
    // Variables: (gx, gy, path) with matching degrees.
    struct Var {
        int gx, gy, path;
    };
    std::vector<Var> vars;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j) {
            const Gen& g = x.gen(i);
            const Gen& h = y.gen(j);
            if (h.r != g.r + r0)
                continue;
            for (int p : alg.hom_basis(g.vertex, h.vertex)) {
                int dg = pl ? alg.pl_deg(p) : alg.deg(p);
                if (dg != g.s - h.s + s0)
                    continue;
                if (((alg.z2(p) - g.t + h.t - t0) % 2 + 2) % 2 != 0)
                    continue;
                vars.push_back({i, j, p});
            }
        }
    // Equations: for each (gx, hy) with hy.r = gx.r + r0 + 1, expand
    //   sum_h f(g,h) d_Y(h,hy) - eps sum_x d_X(g,x) f(x,hy) = 0  over paths.
    int sgn = (r0 % 2 == 0) ? 1 : -1;
    std::map<std::tuple<int, int, int>, int> eq_index;  // (gx, hy, path) -> row
    std::vector<std::vector<std::pair<int, Gauss>>> rows;
    auto row_of = [&](int gx, int hy, int p) {
        auto key = std::make_tuple(gx, hy, p);
        auto it = eq_index.find(key);
        if (it != eq_index.end())
            return it->second;
        int r = (int)rows.size();
        eq_index[key] = r;
        rows.push_back({});
        return r;
    };
    for (int v = 0; v < (int)vars.size(); ++v) {
        const Var& va = vars[v];
        // f(gx,gy) then d_Y(gy, hy)
        for (const auto& [key, e] : y.diff()) {
            if (key.first != va.gy)
                continue;
            Elem prod = alg.mul(alg.from_path(va.path), e);
            for (const auto& [p, c] : prod)
                rows[row_of(va.gx, key.second, p)].push_back({v, c});
        }
        // -eps d_X(gx', gx) ... wait: d_X out of gx: entries (gx -> x2), then f(x2, hy)
        for (const auto& [key, e] : x.diff()) {
            if (key.second != va.gx)
                continue;
            // equation indexed by (key.first, va.gy): d_X(key.first -> va.gx) f(va.gx -> va.gy)
            Elem prod = alg.mul(e, alg.from_path(va.path));
            for (const auto& [p, c] : prod)
                rows[row_of(key.first, va.gy, p)].push_back({v, c * Gauss(-sgn)});
        }
    }
    // Solve the homogeneous system over Q(i) (real data stays real).
    int nv = (int)vars.size();
    int nr = (int)rows.size();
    std::vector<std::vector<Gauss>> m(nr, std::vector<Gauss>(nv, Gauss(0)));
    for (int r = 0; r < nr; ++r)
        for (const auto& [v, c] : rows[r])
            m[r][v] += c;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < nv && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        Gauss inv = m[rank][col].inv();
        for (int c2 = col; c2 < nv; ++c2)
            m[rank][c2] *= inv;
        for (int r = 0; r < nr; ++r)
            if (r != rank && !m[r][col].is_zero()) {
                Gauss f = m[r][col];
                for (int c2 = col; c2 < nv; ++c2)
                    m[r][c2] -= f * m[rank][c2];
            }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(nv, 0);
    for (int c2 : pivot_col)
        is_pivot[c2] = 1;
    std::vector<ChainMap> basis;
    for (int free = 0; free < nv; ++free) {
        if (is_pivot[free])
            continue;
        ChainMap f;
        f.src = &x;
        f.dst = &y;
        f.r0 = r0;
        f.s0 = s0;
        f.t0 = t0;
        std::vector<Gauss> sol(nv, Gauss(0));
        sol[free] = Gauss(1);
        for (int r = rank - 1; r >= 0; --r) {
            int pc = pivot_col[r];
            Gauss s(0);
            for (int c2 = pc + 1; c2 < nv; ++c2)
                if (!m[r][c2].is_zero() && !sol[c2].is_zero())
                    s += m[r][c2] * sol[c2];
            sol[pc] = -s;
        }
        for (int v = 0; v < nv; ++v) {
            if (sol[v].is_zero())
                continue;
            auto key = std::make_pair(vars[v].gx, vars[v].gy);
            Elem cur = f.entries.count(key) ? f.entries[key] : Elem{};
            f.entries[key] = Algebra::add(cur, alg.from_path(vars[v].path, sol[v]));
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

bool compose_is_identity(const ChainMap& f, const ChainMap& g) {
    // g o f where f: X -> Y, g: Y -> X; identity on X?
    const Complex& x = *f.src;
    const Algebra& alg = x.algebra();
    std::map<std::pair<int, int>, Elem> comp;
    for (const auto& [kf, ef] : f.entries)
        for (const auto& [kg, eg] : g.entries) {
            if (kf.second != kg.first)
                continue;
            Elem prod = alg.mul(ef, eg);
            if (Algebra::is_zero(prod))
                continue;
            auto key = std::make_pair(kf.first, kg.second);
            auto it = comp.find(key);
            if (it == comp.end())
                comp[key] = prod;
            else {
                it->second = Algebra::add(it->second, prod);
                if (Algebra::is_zero(it->second))
                    comp.erase(it);
            }
        }
    for (int i = 0; i < x.size(); ++i) {
        auto it = comp.find({i, i});
        if (it == comp.end())
            return false;
        Elem want = alg.from_path(alg.idem(x.gen(i).vertex));
        if (!(it->second == want))
            return false;
        comp.erase(it);
    }
    return comp.empty();
}

namespace {

// f viewed as block matrices per cohomological degree; true iff all square
// and invertible, in which case the inverse chain map is produced.
std::optional<ChainMap> invert_chain_map(const ChainMap& f) {
    const Complex& x = *f.src;
    const Complex& y = *f.dst;
    const Algebra& alg = x.algebra();
    // Group generators by r.
    std::map<int, std::vector<int>> xr, yr;
    for (int i = 0; i < x.size(); ++i)
        xr[x.gen(i).r].push_back(i);
    for (int j = 0; j < y.size(); ++j)
        yr[y.gen(j).r].push_back(j);
    if (xr.size() != yr.size())
        return std::nullopt;
    ChainMap g;
    g.src = &y;
    g.dst = &x;
    for (const auto& [r, xs] : xr) {
        auto it = yr.find(r);
        if (it == yr.end() || it->second.size() != xs.size())
            return std::nullopt;
        const auto& ys = it->second;
        int k = (int)xs.size();
        // Solve F * G = Id over the algebra blockwise: here entries are
        // algebra elements; invert via the path-coefficient linear system.
        // Treat the matrix over the algebra as a linear map on coordinates
        // (target gen, path) and invert numerically over Q(i).
        // Build the coordinate spaces.
        struct Coord {
            int gen, path;
        };
        std::vector<Coord> dom, cod;
        // domain: e_{v(x_i)} viewed as column i => coordinates (i, idempotent)
        // Instead: represent F as map sum_i P(x_i) -> sum_j P(y_j) via right
        // multiplication; invertibility over the graded algebra happens iff
        // the degree-0 scalar parts form an invertible matrix.
        // Extract scalar parts: entry (i -> j) must have an e or ie component
        // only when degrees match; the scalar part is the coefficient of
        // e_{v} (or ie_v acting as i).
        std::vector<std::vector<Gauss>> scal(k, std::vector<Gauss>(k, Gauss(0)));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                auto e = f.entries.find({xs[a], ys[b]});
                if (e == f.entries.end())
                    continue;
                for (const auto& [p, c] : e->second) {
                    if (alg.path(p).kind == PathKind::E)
                        scal[a][b] += c;
                    else if (alg.path(p).kind == PathKind::IE)
                        scal[a][b] += c * Gauss::i();
                }
            }
        // scal must be invertible; compute inverse over Q(i).
        std::vector<std::vector<Gauss>> inv(k, std::vector<Gauss>(k, Gauss(0)));
        for (int i2 = 0; i2 < k; ++i2)
            inv[i2][i2] = Gauss(1);
        std::vector<std::vector<Gauss>> a2 = scal;
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r2 = col; r2 < k; ++r2)
                if (!a2[r2][col].is_zero()) {
                    piv = r2;
                    break;
                }
            if (piv < 0)
                return std::nullopt;
            std::swap(a2[piv], a2[col]);
            std::swap(inv[piv], inv[col]);
            Gauss iv = a2[col][col].inv();
            for (int c2 = 0; c2 < k; ++c2) {
                a2[col][c2] *= iv;
                inv[col][c2] *= iv;
            }
            for (int r2 = 0; r2 < k; ++r2)
                if (r2 != col && !a2[r2][col].is_zero()) {
                    Gauss fct = a2[r2][col];
                    for (int c2 = 0; c2 < k; ++c2) {
                        a2[r2][c2] -= fct * a2[col][c2];
                        inv[r2][c2] -= fct * inv[col][c2];
                    }
                }
        }
        // But the full inverse must also account for nilpotent parts
        // (entries of positive degree). Use the Neumann series:
        // F = S (Id + N'), with S the scalar part; compute F^{-1} from the
        // algebra-valued matrices directly by solving F G = Id over the
        // path coordinates. For our minimal complexes the generators in one
        // degree block satisfy: positive-degree corrections multiply to zero
        // in products of length > dim, so iterate.
        // Represent G = inv . sum_{m>=0} (-(N inv))^m with N = F - S.
        // All products are algebra-valued k x k matrices.
        auto mat_of = [&](bool scalar_only) {
            std::vector<std::vector<Elem>> M(k, std::vector<Elem>(k));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    auto e = f.entries.find({xs[a], ys[b]});
                    if (e == f.entries.end())
                        continue;
                    for (const auto& [p, c] : e->second) {
                        bool is_scal = alg.path(p).kind == PathKind::E ||
                                       alg.path(p).kind == PathKind::IE;
                        if (is_scal == scalar_only)
                            M[a][b] = Algebra::add(M[a][b], alg.from_path(p, c));
                    }
                }
            return M;
        };
        auto S = mat_of(true);
        auto N = mat_of(false);
        (void)S;
        // invS as algebra-valued matrix: scalar action at the target vertices.
        std::vector<std::vector<Elem>> invS(k, std::vector<Elem>(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (!inv[a][b].is_zero())
                    invS[a][b] = alg.scalar_action(x.gen(xs[b]).vertex, inv[a][b]);
        auto mul_mat = [&](const std::vector<std::vector<Elem>>& A,
                           const std::vector<std::vector<Elem>>& B) {
            std::vector<std::vector<Elem>> C(k, std::vector<Elem>(k));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    for (int c2 = 0; c2 < k; ++c2)
                        C[a][b] = Algebra::add(C[a][b], alg.mul(A[a][c2], B[c2][b]));
            return C;
        };
        auto is_zero_mat = [&](const std::vector<std::vector<Elem>>& A) {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    if (!Algebra::is_zero(A[a][b]))
                        return false;
            return true;
        };
        // G = (Id + invS N)^{-1} invS ... careful with sides: F = S + N,
        // F G = Id with G = invS - invS N invS + invS N invS N invS - ...
        // (converges: N has positive degree, nilpotent).
        std::vector<std::vector<Elem>> G = invS;
        std::vector<std::vector<Elem>> term = invS;
        for (int guard = 0; guard < 2 * k + 4; ++guard) {
            term = mul_mat(term, mul_mat(N, invS));
            if (is_zero_mat(term))
                break;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    Elem t = term[a][b];
                    if (guard % 2 == 0)
                        t = Algebra::scale(Gauss(-1), t);
                    G[a][b] = Algebra::add(G[a][b], t);
                }
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (!Algebra::is_zero(G[a][b]))
                    g.entries[{ys[a], xs[b]}] = G[a][b];
    }
    // Verify exactly.
    if (!compose_is_identity(f, g))
        return std::nullopt;
    if (!compose_is_identity(g, f))
        return std::nullopt;
    // g must itself be a chain map; verified implicitly by the two-sided
    // inverse property, but check the degree bookkeeping in debug builds.
    return g;
}

}  // namespace

IsoResult is_isomorphic(const Complex& c, const Complex& d, int retries) {
    IsoResult res{IsoVerdict::No, minimize(c), minimize(d), std::nullopt};
    const Complex& mc = res.min_lhs;
    const Complex& md = res.min_rhs;
    if (mc.iso_key_gens() != md.iso_key_gens())
        return res;  // sound no
    if (mc.size() == 0) {
        res.verdict = IsoVerdict::Yes;
        res.certificate = {MapEntries{}, MapEntries{}};
        return res;
    }
    auto space = chain_map_space(mc, md, 0, 0, 0);
    if (space.empty())
        return res;  // sound no: not even a chain map
    std::mt19937 rng(12345);
    for (int attempt = 0; attempt < retries; ++attempt) {
        int range = 1 + attempt / 4;
        std::uniform_int_distribution<int> coeff(-range, range);
        ChainMap f;
        f.src = &mc;
        f.dst = &md;
        bool any = false;
        for (const auto& b : space) {
            int cc = (attempt == 0) ? 1 : coeff(rng);
            if (cc == 0)
                continue;
            any = true;
            for (const auto& [key, e] : b.entries) {
                Elem cur = f.entries.count(key) ? f.entries[key] : Elem{};
                f.entries[key] = Algebra::add(cur, Algebra::scale(Gauss(cc), e));
            }
        }
        if (!any)
            continue;
        auto inv = invert_chain_map(f);
        if (inv) {
            res.verdict = IsoVerdict::Yes;
            res.certificate = {f.entries, inv->entries};
            return res;
        }
    }
    res.verdict = IsoVerdict::Inconclusive;
    return res;
}

bool isomorphic(const Complex& c, const Complex& d) {
    return is_isomorphic(c, d).verdict == IsoVerdict::Yes;
}

}  // namespace zz
