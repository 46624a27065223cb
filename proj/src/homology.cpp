#include "zz/homology.hpp"

#include <map>

namespace zz {

HomComplex hom_complex(const Complex& c, const Complex& d) {
    const Algebra& alg = c.algebra();
    if (&alg != &d.algebra())
        throw std::invalid_argument("hom_complex needs a common algebra");
    HomComplex out;
    std::map<std::tuple<int, int, int>, int> index;
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < d.size(); ++j) {
            const Gen& g = c.gen(i);
            const Gen& h = d.gen(j);
            for (int p : alg.hom_basis(g.vertex, h.vertex)) {
                int s1 = h.r - g.r;
                int s2 = alg.deg(p) - g.s + h.s;
                int s3 = ((alg.z2(p) - g.t + h.t) % 2 + 2) % 2;
                index[{i, j, p}] = (int)out.basis.size();
                out.basis.push_back({i, j, p, s1, s2, s3});
            }
        }
    out.d.resize(out.basis.size());
    for (int v = 0; v < (int)out.basis.size(); ++v) {
        const auto& m = out.basis[v];
        // d_D after f: entries out of m.gd
        for (const auto& [key, e] : d.diff()) {
            if (key.first != m.gd)
                continue;
            Elem prod = alg.mul(alg.from_path(m.path), e);
            for (const auto& [p, coeff] : prod)
                out.d[v].push_back({index.at({m.gc, key.second, p}), coeff});
        }
        // -(-1)^{s1} f after d_C: entries into m.gc
        Gauss sgn((m.s1 % 2 == 0) ? -1 : 1);
        for (const auto& [key, e] : c.diff()) {
            if (key.second != m.gc)
                continue;
            Elem prod = alg.mul(e, alg.from_path(m.path));
            for (const auto& [p, coeff] : prod)
                out.d[v].push_back({index.at({key.first, m.gd, p}), coeff * sgn});
        }
    }
    return out;
}

namespace {

int rank_of(std::vector<std::vector<Gauss>>& m) {
    int rows = (int)m.size();
    if (rows == 0)
        return 0;
    int cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        Gauss inv = m[rank][col].inv();
        for (int c2 = col; c2 < cols; ++c2)
            m[rank][c2] *= inv;
        for (int r = rank + 1; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                Gauss f = m[r][col];
                for (int c2 = col; c2 < cols; ++c2)
                    m[r][c2] -= f * m[rank][c2];
            }
        ++rank;
    }
    return rank;
}

}  // namespace

Laurent poincare(const Complex& c, const Complex& d) {
    const Algebra& alg = c.algebra();
    Grading g = alg.tag() == AlgTag::B ? Grading::TRI : Grading::BI;
    HomComplex hc = hom_complex(c, d);
    // Partition basis indices by internal bidegree (s2, s3); within each, the
    // differential only moves s1 by one.
    std::map<std::pair<int, int>, std::vector<int>> by_bidegree;
    for (int v = 0; v < (int)hc.basis.size(); ++v)
        by_bidegree[{hc.basis[v].s2, hc.basis[v].s3}].push_back(v);
    Laurent out(g);
    for (const auto& [bideg, idcs] : by_bidegree) {
        std::map<int, std::vector<int>> by_s1;
        for (int v : idcs)
            by_s1[hc.basis[v].s1].push_back(v);
        // rank of d restricted to each s1 slice
        std::map<int, int> rank_at;  // rank of d: s1 -> s1+1
        for (const auto& [s1, vs] : by_s1) {
            auto tgt_it = by_s1.find(s1 + 1);
            if (tgt_it == by_s1.end()) {
                rank_at[s1] = 0;
                continue;
            }
            std::map<int, int> tgt_pos;
            for (int t = 0; t < (int)tgt_it->second.size(); ++t)
                tgt_pos[tgt_it->second[t]] = t;
            std::vector<std::vector<Gauss>> m(vs.size(),
                                              std::vector<Gauss>(tgt_it->second.size(),
                                                                 Gauss(0)));
            for (int r = 0; r < (int)vs.size(); ++r)
                for (const auto& [t, coeff] : hc.d[vs[r]]) {
                    auto it = tgt_pos.find(t);
                    if (it != tgt_pos.end())
                        m[r][it->second] += coeff;
                }
            rank_at[s1] = rank_of(m);
        }
        for (const auto& [s1, vs] : by_s1) {
            int dim = (int)vs.size();
            int rk_out = rank_at[s1];
            int rk_in = rank_at.count(s1 - 1) ? rank_at[s1 - 1] : 0;
            int h = dim - rk_out - rk_in;
            if (h != 0)
                out.add_term({s1, bideg.first, bideg.second}, h);
        }
    }
    return out;
}

Laurent hom_euler(const Complex& c, const Complex& d) {
    const Algebra& alg = c.algebra();
    Grading g = alg.tag() == AlgTag::B ? Grading::TRI : Grading::BI;
    HomComplex hc = hom_complex(c, d);
    Laurent out(g);
    for (const auto& m : hc.basis)
        out.add_term({0, m.s2, m.s3}, (m.s1 % 2 == 0) ? 1 : -1);
    return out;
}

}  // namespace zz
