#include "zz/braid.hpp"

#include <stdexcept>

namespace zz {

BraidWord BraidWord::inverse() const {
    BraidWord w = *this;
    w.letters.clear();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(-*it);
    return w;
}

bool BraidWord::valid() const {
    for (int l : letters) {
        int j = std::abs(l);
        if (j < 1 || j > generators())
            return false;
    }
    return true;
}

namespace {

// The free module P_j (x)_{F_j} {}_jP (x) C together with the bookkeeping of
// its generators (source generator of C, tensor-basis path).
struct TensorCx {
    Complex cx;
    std::vector<std::pair<int, int>> origin;  // (gen of C, beta path id)
};

TensorCx tensor_with_bimodule(const Complex& c, int j, int extra_s) {
    const Algebra& alg = c.algebra();
    bool pl = c.pl_mode();
    TensorCx t{Complex(alg, pl), {}};
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < c.size(); ++i) {
        const Gen& g = c.gen(i);
        for (int beta : alg.tensor_basis(j, g.vertex)) {
            int ds = pl ? alg.pl_deg(beta) : alg.deg(beta);
            int dt = (alg.tag() == AlgTag::B) ? alg.z2(beta) : 0;
            int id = t.cx.add_gen({j, g.r, g.s + ds + extra_s, (g.t + dt) % 2});
            t.origin.push_back({i, beta});
            index[{i, beta}] = id;
        }
    }
    // Differential id (x) d_C: expand beta * entry over the tensor basis.
    for (const auto& [key, e] : c.diff()) {
        auto [from, to] = key;
        for (int beta : alg.tensor_basis(j, c.gen(from).vertex)) {
            Elem prod = alg.mul(alg.from_path(beta), e);
            if (Algebra::is_zero(prod))
                continue;
            for (const auto& [gamma, coeff] : alg.expand_tensor(j, prod)) {
                // Right-multiplication element realizing the scalar.
                Elem action = alg.scalar_action(j, coeff);
                t.cx.add_diff(index.at({from, beta}), index.at({to, gamma}), action);
            }
        }
    }
    return t;
}

}  // namespace

namespace {

Complex apply_generator_impl(const Complex& c, int letter, bool with_b1_twist);

}  // namespace

Complex apply_generator(const Complex& c, int letter) {
    return apply_generator_impl(c, letter, true);
}

Complex apply_generator_r(const Complex& c, int letter) {
    return apply_generator_impl(c, letter, false);
}

namespace {

Complex apply_generator_impl(const Complex& c, int letter, bool with_b1_twist) {
    const Algebra& alg = c.algebra();
    int j = std::abs(letter);
    if (j < 1 || j > alg.vertices())
        throw std::invalid_argument("generator index out of range");
    bool b1 = with_b1_twist && (alg.tag() == AlgTag::B && j == 1);

    Complex result(alg, c.pl_mode());
    if (letter > 0) {
        // cone(P_j (x) _jP (x) C --ev--> C)
        TensorCx t = tensor_with_bimodule(c, j, 0);
        ChainMap ev;
        ev.src = &t.cx;
        ev.dst = &c;
        for (int i = 0; i < t.cx.size(); ++i) {
            auto [gi, beta] = t.origin[i];
            ev.entries[{i, gi}] = alg.from_path(beta);
        }
        result = mapping_cone(ev);
    } else {
        // cone(C --gamma--> P_j (x) _jP (x) C {-1})[-1]
        TensorCx t = tensor_with_bimodule(c, j, -1);
        ChainMap co;
        co.src = &c;
        co.dst = &t.cx;
        std::map<std::pair<int, int>, int> index;
        for (int i = 0; i < t.cx.size(); ++i)
            index[t.origin[i]] = i;
        for (int gi = 0; gi < c.size(); ++gi) {
            int v = c.gen(gi).vertex;
            for (const auto& term : alg.gamma(j)) {
                // component x (x) (y e_v)
                if (alg.path(term.y).v != v)
                    continue;
                Elem y = alg.from_path(term.y, term.coeff);
                for (const auto& [beta, coeff] : alg.expand_tensor(j, y)) {
                    Elem entry = alg.mul(alg.from_path(term.x), alg.scalar_action(j, coeff));
                    int target = index.at({gi, beta});
                    auto key = std::make_pair(gi, target);
                    Elem cur = co.entries.count(key) ? co.entries[key] : Elem{};
                    co.entries[key] = Algebra::add(cur, entry);
                }
            }
        }
        result = mapping_cone(co).shifted(-1, 0, 0);
    }
    if (b1)
        result = result.shifted(0, 0, 1);
    result.assert_valid("apply_generator");
    return minimize(result);
}

}  // namespace

Complex apply_word(const Complex& c, const std::vector<int>& letters) {
    Complex cur = minimize(c);
    for (int l : letters)
        cur = apply_generator(cur, l);
    return cur;
}

Complex apply_word_r(const Complex& c, const std::vector<int>& letters) {
    Complex cur = minimize(c);
    for (int l : letters)
        cur = apply_generator_r(cur, l);
    return cur;
}

std::vector<int> psi(int n, const std::vector<int>& letters) {
    std::vector<int> out;
    for (int l : letters) {
        int j = std::abs(l);
        if (j == 1) {
            out.push_back(l > 0 ? n : -n);
        } else if (l > 0) {
            out.push_back(n - (j - 1));
            out.push_back(n + (j - 1));
        } else {
            out.push_back(-(n + (j - 1)));
            out.push_back(-(n - (j - 1)));
        }
    }
    return out;
}

Complex apply_tl(const Complex& c, int j) {
    if (!c.pl_mode())
        throw std::invalid_argument("TL functors need the path-length grading mode");
    TensorCx t = tensor_with_bimodule(c, j, -1);
    t.cx.assert_valid("apply_tl");
    return minimize(t.cx);
}

std::vector<int> free_reduce(std::vector<int> letters) {
    std::vector<int> out;
    for (int l : letters) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

}  // namespace zz
