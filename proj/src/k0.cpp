#include "zz/k0.hpp"

#include <sstream>

namespace zz {

K0Vector k0_class(const Complex& c) {
    const Algebra& alg = c.algebra();
    Grading g = alg.tag() == AlgTag::B ? Grading::KB : Grading::KA;
    K0Vector v{g, std::vector<Laurent>((size_t)alg.vertices(), Laurent(g))};
    for (int i = 0; i < c.size(); ++i) {
        const Gen& gen = c.gen(i);
        Integer sign = (gen.r % 2 == 0) ? 1 : -1;
        int t = gen.t;
        if (alg.tag() == AlgTag::B && gen.vertex >= 2)
            t = 0;  // s[P_j] = [P_j] for j >= 2
        v.coord[gen.vertex - 1].add_term({gen.s, g == Grading::KB ? t : 0, 0}, sign);
    }
    return v;
}

K0Matrix rep_matrix(const Algebra& alg, int letter) {
    int n = alg.vertices();
    Grading g = alg.tag() == AlgTag::B ? Grading::KB : Grading::KA;
    K0Matrix m(n, std::vector<Laurent>(n, Laurent(g)));
    for (int k = 1; k <= n; ++k) {
        Complex img = apply_generator(Complex::projective(alg, k), letter);
        K0Vector col = k0_class(img);
        for (int row = 0; row < n; ++row)
            m[row][k - 1] = col.coord[row];
    }
    return m;
}

K0Matrix k0_identity(Grading g, int n) {
    K0Matrix m(n, std::vector<Laurent>(n, Laurent(g)));
    for (int i = 0; i < n; ++i)
        m[i][i] = Laurent::one(g);
    return m;
}

K0Matrix k0_mul(const K0Matrix& a, const K0Matrix& b) {
    int n = (int)a.size();
    int p = (int)b[0].size();
    int mid = (int)b.size();
    Grading g = a[0][0].tag();
    K0Matrix out(n, std::vector<Laurent>(p, Laurent(g)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j)
            for (int k = 0; k < mid; ++k)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

K0Vector k0_apply(const K0Matrix& m, const K0Vector& v) {
    int rows = (int)m.size();
    K0Vector out{v.tag, std::vector<Laurent>(rows, Laurent(v.tag))};
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < (int)v.coord.size(); ++j)
            out.coord[i] += m[i][j] * v.coord[j];
    return out;
}

bool k0_equal(const K0Matrix& a, const K0Matrix& b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

K0Matrix tensor_matrix(int n) {
    K0Matrix t(2 * n - 1, std::vector<Laurent>(n, Laurent(Grading::KA)));
    t[n - 1][0] = Laurent::one(Grading::KA);
    for (int j = 2; j <= n; ++j) {
        t[n - j][j - 1] = Laurent::one(Grading::KA);
        t[n + j - 2][j - 1] = Laurent::one(Grading::KA);
    }
    return t;
}

namespace {

Laurent sub_s1(const Laurent& p) {
    // KB -> KA by s -> 1
    return p.specialize(Grading::KA, Laurent::Assignment{{0, -1, 0}});
}

}  // namespace

K0Matrix kb_to_ka(const K0Matrix& m) {
    K0Matrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i])
            out[i].push_back(sub_s1(e));
    return out;
}

K0Vector kb_to_ka(const K0Vector& v) {
    K0Vector out{Grading::KA, {}};
    for (const auto& e : v.coord)
        out.coord.push_back(sub_s1(e));
    return out;
}

DecatReport check_decat_square(int n) {
    DecatReport rep{true, {}};
    Algebra b(AlgTag::B, n);
    Algebra a(AlgTag::A, 2 * n - 1);
    K0Matrix t = tensor_matrix(n);
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.lines.push_back("FAIL " + s);
    };
    auto pass = [&](const std::string& s) { rep.lines.push_back("ok   " + s); };

    for (int j = 1; j <= n; ++j) {
        K0Matrix rb = kb_to_ka(rep_matrix(b, j));
        K0Matrix ra = k0_identity(Grading::KA, 2 * n - 1);
        for (int l : psi(n, {j}))
            ra = k0_mul(rep_matrix(a, l), ra);
        K0Matrix lhs = k0_mul(t, rb);
        K0Matrix rhs = k0_mul(ra, t);
        std::ostringstream os;
        os << "T rho_KB(s" << j << ")|_{s->1} = rho_KA(psi(s" << j << ")) T";
        if (k0_equal(lhs, rhs))
            pass(os.str());
        else
            fail(os.str());
    }

    // Printed blocks. rho_KB(sigma_1): [[-sq, -(1+s)], [0, 1]] in the
    // (vertex1, vertex2) corner; rho_KB(sigma_n): [[1, 0], [-q, -q]] in the
    // (vertex n-1, vertex n) corner.
    K0Matrix r1 = rep_matrix(b, 1);
    auto L = [&](const char* s) { return laurent_from_text(Grading::KB, s); };
    bool blk1 = r1[0][0] == L("-q*s") && r1[0][1] == L("-1 - s") && r1[1][0] == L("0") &&
                r1[1][1] == L("1");
    // Remaining rows/cols must be the identity away from the block.
    for (int i = 2; i < n; ++i)
        blk1 = blk1 && r1[i][i] == Laurent::one(Grading::KB);
    if (blk1)
        pass("rho_KB(sigma_1) block [[-sq, -(1+s)], [0, 1]]");
    else
        fail("rho_KB(sigma_1) block [[-sq, -(1+s)], [0, 1]]");

    K0Matrix rn = rep_matrix(b, n);
    bool blkn = rn[n - 2][n - 2] == L("1") && rn[n - 2][n - 1] == L("0") &&
                rn[n - 1][n - 2] == L("-q") && rn[n - 1][n - 1] == L("-q");
    if (blkn)
        pass("rho_KB(sigma_n) block [[1, 0], [-q, -q]]");
    else
        fail("rho_KB(sigma_n) block [[1, 0], [-q, -q]]");
    return rep;
}

}  // namespace zz
