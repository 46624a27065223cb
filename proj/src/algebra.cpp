#include "zz/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace zz {

Algebra::Algebra(AlgTag tag, int rank) : tag_(tag), rank_(rank) {
    if (tag == AlgTag::B) {
        if (rank < 2)
            throw std::invalid_argument("type B rank must be >= 2");
        mid_ = 0;
    } else {
        if (rank < 3 || rank % 2 == 0)
            throw std::invalid_argument("type A vertex count must be odd and >= 3");
        mid_ = (rank + 1) / 2;
    }
    build_paths();
    build_table();
}

void Algebra::build_paths() {
    int nv = vertices();
    auto put = [&](PathKind k, int u, int v) {
        index_[{(int)k, u, v}] = (int)paths_.size();
        paths_.push_back({k, u, v});
    };
    for (int j = 1; j <= nv; ++j)
        put(PathKind::E, j, j);
    if (tag_ == AlgTag::B)
        for (int j = 2; j <= nv; ++j)
            put(PathKind::IE, j, j);
    for (int j = 1; j < nv; ++j) {
        put(PathKind::ARR, j, j + 1);
        put(PathKind::ARR, j + 1, j);
    }
    if (tag_ == AlgTag::B)
        for (int j = 1; j < nv; ++j) {
            put(PathKind::ARRI, j, j + 1);
            put(PathKind::ARRI, j + 1, j);
        }
    for (int j = 1; j <= nv; ++j)
        put(PathKind::X, j, j);
    if (tag_ == AlgTag::B)
        for (int j = 2; j <= nv; ++j)
            put(PathKind::XI, j, j);

    deg_.resize(paths_.size());
    z2_.resize(paths_.size());
    pl_.resize(paths_.size());
    for (size_t i = 0; i < paths_.size(); ++i) {
        const Path& p = paths_[i];
        int d = 0, z = 0, pl = 0;
        switch (p.kind) {
            case PathKind::E: break;
            case PathKind::IE: z = 1; break;
            case PathKind::ARR:
            case PathKind::ARRI:
                if (tag_ == AlgTag::B) {
                    d = (p.v == p.u - 1) ? 1 : 0;
                } else {
                    if (p.v == p.u - 1)
                        d = (p.u > mid_) ? 1 : 0;
                    else
                        d = (p.u < mid_) ? 1 : 0;
                }
                z = (p.kind == PathKind::ARRI) ? 1 : 0;
                pl = 1;
                break;
            case PathKind::X:
            case PathKind::XI:
                d = 1;
                z = (p.kind == PathKind::XI) ? 1 : 0;
                pl = 2;
                break;
        }
        deg_[i] = d;
        z2_[i] = z;
        pl_[i] = pl;
    }
}

int Algebra::path_id(PathKind k, int u, int v) const {
    auto it = index_.find({(int)k, u, v});
    if (it == index_.end())
        throw std::logic_error("no such basis path");
    return it->second;
}

std::optional<int> Algebra::try_path_id(PathKind k, int u, int v) const {
    auto it = index_.find({(int)k, u, v});
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

namespace {

// Loose form ie^a . core . ie^b used while multiplying.
struct Loose {
    int sign = 1;  // +-1
    int a = 0;     // i at source
    PathKind core = PathKind::E;
    int u = 0, v = 0;
    int b = 0;  // i at target
    bool zero = false;
};

Loose loose_of(const Path& p) {
    Loose l;
    switch (p.kind) {
        case PathKind::E: l.core = PathKind::E; break;
        case PathKind::IE:
            l.core = PathKind::E;
            l.b = 1;
            break;
        case PathKind::ARR: l.core = PathKind::ARR; break;
        case PathKind::ARRI:
            l.core = PathKind::ARR;
            if (p.v >= 2)
                l.b = 1;
            else
                l.a = 1;
            break;
        case PathKind::X: l.core = PathKind::X; break;
        case PathKind::XI:
            l.core = PathKind::X;
            l.b = 1;
            break;
    }
    l.u = p.u;
    l.v = p.v;
    return l;
}

}  // namespace

Algebra::PathProd Algebra::mul_paths(int ia, int ib) const {
    const Path& pa = paths_[ia];
    const Path& pb = paths_[ib];
    PathProd zero{Gauss(0), -1};
    if (pa.v != pb.u)
        return zero;

    if (tag_ == AlgTag::A) {
        // No i-decorations; pure zigzag rewriting.
        if (pa.kind == PathKind::E)
            return PathProd{Gauss(1), ib};
        if (pb.kind == PathKind::E)
            return PathProd{Gauss(1), ia};
        if (pa.kind == PathKind::X || pb.kind == PathKind::X)
            return zero;  // loops kill arrows and loops
        if (pa.u == pb.v)
            return PathProd{Gauss(1), path_id(PathKind::X, pa.u, pa.u)};
        return zero;  // straight length-2 paths vanish
    }

    // Canonicalize a loose form ie^a . core . ie^b into the path basis.
    auto canonical = [&](Loose L) -> PathProd {
        if (L.zero)
            return PathProd{Gauss(0), -1};
        if (L.core == PathKind::E || L.core == PathKind::X) {
            int ii = L.a + L.b;  // both i's live at the same vertex
            if (ii >= 2) {
                L.sign = -L.sign;
                ii -= 2;
            }
            if (ii && L.u == 1)
                throw std::logic_error("i at vertex 1");
            PathKind k = (L.core == PathKind::E) ? (ii ? PathKind::IE : PathKind::E)
                                                 : (ii ? PathKind::XI : PathKind::X);
            return PathProd{Gauss(L.sign), path_id(k, L.u, L.v)};
        }
        // Arrow core: slide any source i to the target when both vertices >= 2.
        if (L.b >= 2) {
            L.sign = -L.sign;
            L.b -= 2;
        }
        if (L.a >= 2) {
            L.sign = -L.sign;
            L.a -= 2;
        }
        if (L.a && L.u >= 2 && L.v >= 2) {
            L.a -= 1;
            L.b += 1;
            if (L.b == 2) {
                L.sign = -L.sign;
                L.b = 0;
            }
        }
        if (L.a && L.u == 1)
            throw std::logic_error("i at vertex 1");
        if (L.b && L.v == 1)
            throw std::logic_error("i at vertex 1");
        int ii = L.a + L.b;
        return PathProd{Gauss(L.sign),
                        path_id(ii ? PathKind::ARRI : PathKind::ARR, L.u, L.v)};
    };

    Loose la = loose_of(pa), lb = loose_of(pb);
    int sign = 1;
    int mid = la.b + lb.a;  // i's at the junction vertex pa.v
    la.b = 0;
    lb.a = 0;
    if (mid == 2) {
        sign = -sign;
        mid = 0;
    }

    if (la.core == PathKind::E) {
        Loose res = lb;
        res.a += la.a + mid;  // all at the same vertex
        res.sign = sign;
        return canonical(res);
    }
    if (lb.core == PathKind::E) {
        Loose res = la;
        res.b += mid + lb.b;
        res.sign = sign;
        return canonical(res);
    }
    if (la.core == PathKind::X || lb.core == PathKind::X)
        return zero;  // X*X = 0 and loops kill arrows
    // arrow * arrow with mid i's at the junction
    if (mid == 1) {
        if (la.u == 1 && lb.v == 1)
            return zero;  // (1|2)(ie_2)(2|1) = 0
        if (lb.v >= 2) {
            lb.b += 1;  // slide forward through lb (junction, target >= 2)
        } else {
            la.a += 1;  // slide backward through la (la.u >= 2 here)
        }
        mid = 0;
    }
    if (la.u != lb.v)
        return zero;  // straight length-2 path
    Loose res;
    res.core = PathKind::X;
    res.u = res.v = la.u;
    res.a = la.a;
    res.b = lb.b;
    res.sign = sign;
    return canonical(res);
}

void Algebra::build_table() {
    size_t n = paths_.size();
    table_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            table_[a * n + b] = mul_paths((int)a, (int)b);
}

Elem Algebra::unit() const {
    Elem e;
    for (int j = 1; j <= vertices(); ++j)
        e[idem(j)] = Gauss(1);
    return e;
}

Elem Algebra::from_path(int id, Gauss c) const {
    Elem e;
    if (!c.is_zero())
        e[id] = c;
    return e;
}

Elem Algebra::mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            const PathProd& pp = table(pa, pb);
            if (pp.id < 0)
                continue;
            Gauss c = ca * cb * pp.coeff;
            if (c.is_zero())
                continue;
            auto it = r.find(pp.id);
            if (it == r.end())
                r[pp.id] = c;
            else {
                it->second += c;
                if (it->second.is_zero())
                    r.erase(it);
            }
        }
    return r;
}

Elem Algebra::add(const Elem& a, const Elem& b) {
    Elem r = a;
    for (const auto& [p, c] : b) {
        auto it = r.find(p);
        if (it == r.end())
            r[p] = c;
        else {
            it->second += c;
            if (it->second.is_zero())
                r.erase(it);
        }
    }
    return r;
}

Elem Algebra::scale(const Gauss& c, const Elem& a) {
    Elem r;
    if (c.is_zero())
        return r;
    for (const auto& [p, x] : a)
        r[p] = c * x;
    return r;
}

std::optional<Algebra::Homog> Algebra::homogeneous(const Elem& a, bool pl_mode) const {
    std::optional<Homog> h;
    for (const auto& [p, c] : a) {
        (void)c;
        Homog cur{paths_[p].u, paths_[p].v, pl_mode ? pl_[p] : deg_[p], z2_[p]};
        if (!h)
            h = cur;
        else if (h->src != cur.src || h->tgt != cur.tgt || h->deg != cur.deg ||
                 h->z2 != cur.z2)
            return std::nullopt;
    }
    return h;
}

std::vector<int> Algebra::hom_basis(int j, int k) const {
    std::vector<int> out;
    for (int i = 0; i < (int)paths_.size(); ++i)
        if (paths_[i].u == j && paths_[i].v == k)
            out.push_back(i);
    return out;
}

Laurent Algebra::hom_graded_dim(int j, int k) const {
    Grading g = tag_ == AlgTag::B ? Grading::TRI : Grading::BI;
    Laurent p(g);
    for (int id : hom_basis(j, k)) {
        if (tag_ == AlgTag::B)
            p.add_term({0, deg_[id], z2_[id]}, 1);
        else
            p.add_term({0, deg_[id], 0}, 1);
    }
    return p;
}

std::vector<int> Algebra::tensor_basis(int j, int k) const {
    std::vector<int> out;
    if (k == j) {
        out.push_back(path_id(PathKind::E, j, j));
        out.push_back(path_id(PathKind::X, j, j));
        return out;
    }
    if (std::abs(k - j) != 1 || k < 1 || k > vertices() || j < 1 || j > vertices())
        return out;
    out.push_back(path_id(PathKind::ARR, j, k));
    if (tag_ == AlgTag::B && j == 1)
        out.push_back(path_id(PathKind::ARRI, 1, 2));
    return out;
}

int Algebra::i_variant(int beta) const {
    const Path& p = paths_[beta];
    switch (p.kind) {
        case PathKind::E: return path_id(PathKind::IE, p.u, p.v);
        case PathKind::X: return path_id(PathKind::XI, p.u, p.v);
        case PathKind::ARR: return path_id(PathKind::ARRI, p.u, p.v);
        default: throw std::logic_error("i_variant of decorated path");
    }
}

std::vector<std::pair<int, Gauss>> Algebra::expand_tensor(int j, const Elem& a) const {
    std::vector<std::pair<int, Gauss>> out;
    if (a.empty())
        return out;
    int k = paths_[a.begin()->first].v;
    auto basis = tensor_basis(j, k);
    Elem rest = a;
    for (int beta : basis) {
        Gauss c(0);
        auto it = rest.find(beta);
        if (it != rest.end()) {
            c += it->second;
            rest.erase(it);
        }
        if (tag_ == AlgTag::B && j >= 2) {
            int ib = i_variant(beta);
            auto jt = rest.find(ib);
            if (jt != rest.end()) {
                c += Gauss::i() * jt->second;
                rest.erase(jt);
            }
        }
        if (!c.is_zero())
            out.push_back({beta, c});
    }
    if (!rest.empty())
        throw std::logic_error("element not in the span of the tensor basis");
    return out;
}

Elem Algebra::scalar_action(int j, const Gauss& c) const {
    Elem r;
    if (tag_ == AlgTag::B) {
        if (!c.re.is_zero())
            r[path_id(PathKind::E, j, j)] = Gauss(c.re);
        if (!c.im.is_zero()) {
            if (j == 1)
                throw std::logic_error("imaginary scalar on P_1");
            r[path_id(PathKind::IE, j, j)] = Gauss(c.im);
        }
    } else {
        if (!c.is_zero())
            r[path_id(PathKind::E, j, j)] = c;
    }
    return r;
}

std::vector<Algebra::GammaTerm> Algebra::gamma(int j) const {
    std::vector<GammaTerm> out;
    int e = path_id(PathKind::E, j, j);
    int x = path_id(PathKind::X, j, j);
    out.push_back({Gauss(1), x, e});
    out.push_back({Gauss(1), e, x});
    if (tag_ == AlgTag::B && j == 1) {
        out.push_back({Gauss(1), path_id(PathKind::ARR, 2, 1), path_id(PathKind::ARR, 1, 2)});
        out.push_back(
            {Gauss(-1), path_id(PathKind::ARRI, 2, 1), path_id(PathKind::ARRI, 1, 2)});
        return out;
    }
    if (j - 1 >= 1)
        out.push_back(
            {Gauss(1), path_id(PathKind::ARR, j - 1, j), path_id(PathKind::ARR, j, j - 1)});
    if (j + 1 <= vertices())
        out.push_back(
            {Gauss(1), path_id(PathKind::ARR, j + 1, j), path_id(PathKind::ARR, j, j + 1)});
    return out;
}

std::string Algebra::path_name(int id) const {
    const Path& p = paths_[id];
    std::ostringstream os;
    switch (p.kind) {
        case PathKind::E: os << "e" << p.u; break;
        case PathKind::IE: os << "ie" << p.u; break;
        case PathKind::ARR: os << "(" << p.u << "|" << p.v << ")"; break;
        case PathKind::ARRI:
            if (p.v >= 2)
                os << "(" << p.u << "|" << p.v << ")(ie" << p.v << ")";
            else
                os << "(ie" << p.u << ")(" << p.u << "|" << p.v << ")";
            break;
        case PathKind::X: os << "X" << p.u; break;
        case PathKind::XI: os << "X" << p.u << "(ie" << p.u << ")"; break;
    }
    return os.str();
}

std::string Algebra::elem_name(const Elem& a) const {
    if (a.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : a) {
        std::string cs = to_string(c);
        if (!first)
            os << " + ";
        first = false;
        if (cs == "1")
            os << path_name(p);
        else if (cs == "-1")
            os << "-" << path_name(p);
        else if (c.is_real() || c.re == 0)
            os << cs << "*" << path_name(p);
        else
            os << "(" << cs << ")*" << path_name(p);
    }
    return os.str();
}

Elem Algebra::elem_from_text(const std::string& s) const {
    // Accepts sums of [coeff *] path-name with coeff an integer, "i" or "-i".
    Elem out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (isspace((unsigned char)s[i])))
            ++i;
    };
    skip();
    if (s.substr(i) == "0")
        return out;
    while (i < s.size()) {
        skip();
        Gauss coeff(1);
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
            skip();
        }
        if (i < s.size() && isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (j < s.size() && isdigit((unsigned char)s[j]))
                ++j;
            coeff = Gauss(Rational(Integer(s.substr(i, j - i))));
            i = j;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        if (i < s.size() && s[i] == 'i' && i + 1 < s.size() && s[i + 1] == '*') {
            coeff *= Gauss::i();
            i += 2;
            skip();
        }
        if (neg)
            coeff = -coeff;
        // path name: find the longest basis-path name matching at i
        int best = -1;
        size_t best_len = 0;
        for (int id = 0; id < (int)paths_.size(); ++id) {
            std::string nm = path_name(id);
            if (s.compare(i, nm.size(), nm) == 0 && nm.size() > best_len) {
                best = id;
                best_len = nm.size();
            }
        }
        if (best < 0)
            throw std::invalid_argument("cannot parse algebra element '" + s + "'");
        i += best_len;
        out = add(out, from_path(best, coeff));
        skip();
    }
    return out;
}

PhiMap::PhiMap(const Algebra& b, const Algebra& a) : b_(&b), a_(&a) {
    if (b.tag() != AlgTag::B || a.tag() != AlgTag::A || a.rank() != 2 * b.rank() - 1)
        throw std::invalid_argument("phi expects B_n and A_{2n-1}");
    int n = b.rank();
    image_.resize(b.dim());
    auto A = [&](PathKind k, int u, int v) { return a.from_path(a.path_id(k, u, v)); };
    for (int id = 0; id < b.dim(); ++id) {
        const Path& p = b.path(id);
        Elem img;
        switch (p.kind) {
            case PathKind::E:
                if (p.u == 1)
                    img = A(PathKind::E, n, n);
                else
                    img = Algebra::add(A(PathKind::E, n - p.u + 1, n - p.u + 1),
                                       A(PathKind::E, n + p.u - 1, n + p.u - 1));
                break;
            case PathKind::IE: {
                Elem plus = A(PathKind::E, n + p.u - 1, n + p.u - 1);
                Elem minus = A(PathKind::E, n - p.u + 1, n - p.u + 1);
                img = Algebra::scale(Gauss::i(),
                                     Algebra::add(plus, Algebra::scale(Gauss(-1), minus)));
                break;
            }
            case PathKind::X:
                if (p.u == 1)
                    img = Algebra::scale(Gauss(2), A(PathKind::X, n, n));
                else
                    img = Algebra::add(A(PathKind::X, n - p.u + 1, n - p.u + 1),
                                       A(PathKind::X, n + p.u - 1, n + p.u - 1));
                break;
            case PathKind::ARR: {
                int j = std::max(p.u, p.v);  // arrow between j-1 and j
                if (p.v == p.u + 1)          // (j-1|j)
                    img = Algebra::add(A(PathKind::ARR, n - j + 2, n - j + 1),
                                       A(PathKind::ARR, n + j - 2, n + j - 1));
                else  // (j|j-1)
                    img = Algebra::add(A(PathKind::ARR, n - j + 1, n - j + 2),
                                       A(PathKind::ARR, n + j - 1, n + j - 2));
                break;
            }
            case PathKind::ARRI:
            case PathKind::XI: {
                // Composite: core times ie at the decorated vertex.
                int core, iv;
                if (p.kind == PathKind::XI) {
                    core = b.path_id(PathKind::X, p.u, p.v);
                    iv = b.path_id(PathKind::IE, p.u, p.u);
                    img = a.mul(image_[core], image_[iv]);
                } else if (p.v >= 2) {
                    core = b.path_id(PathKind::ARR, p.u, p.v);
                    iv = b.path_id(PathKind::IE, p.v, p.v);
                    img = a.mul(image_[core], image_[iv]);
                } else {
                    core = b.path_id(PathKind::ARR, p.u, p.v);
                    iv = b.path_id(PathKind::IE, p.u, p.u);
                    img = a.mul(image_[iv], image_[core]);
                }
                break;
            }
        }
        image_[id] = img;
    }
}

Elem PhiMap::apply(const Gauss& c, int b_path) const {
    return Algebra::scale(c, image_[b_path]);
}

Elem PhiMap::apply_elem(const Gauss& c, const Elem& e) const {
    Elem out;
    for (const auto& [p, cc] : e)
        out = Algebra::add(out, apply(c * cc, p));
    return out;
}

int PhiMap::target_vertex(int j, int side) const {
    int n = b_->rank();
    if (j == 1)
        return n;
    return side == 0 ? n - (j - 1) : n + (j - 1);
}

Elem PhiMap::block(int b_path, int side_src, int side_tgt) const {
    const Path& p = b_->path(b_path);
    int es = a_->idem(target_vertex(p.u, side_src));
    int et = a_->idem(target_vertex(p.v, side_tgt));
    return a_->mul(a_->from_path(es), a_->mul(image_[b_path], a_->from_path(et)));
}

}  // namespace zz
