#include "zz/laurent.hpp"
#include <algorithm>
#include <vector>

#include <ostream>
#include <sstream>

namespace zz {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const Gauss& g) {
    if (g.is_zero())
        return "0";
    std::ostringstream os;
    if (g.re != 0) {
        os << g.re;
        if (g.im > 0)
            os << "+";
    }
    if (g.im != 0) {
        if (g.im == -1)
            os << "-";
        else if (g.im != 1)
            os << g.im;
        os << "i";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << to_string(g); }

int grading_vars(Grading g) {
    switch (g) {
        case Grading::TRI: return 3;
        case Grading::BI: return 2;
        case Grading::KB: return 2;
        case Grading::KA: return 1;
    }
    return 0;
}

bool grading_has_torsion(Grading g) { return g == Grading::TRI || g == Grading::KB; }

const char* grading_var_name(Grading g, int idx) {
    static const char* tri[] = {"q1", "q2", "q3"};
    static const char* kb[] = {"q", "s"};
    switch (g) {
        case Grading::TRI: return tri[idx];
        case Grading::BI: return tri[idx];
        case Grading::KB: return kb[idx];
        case Grading::KA: return kb[idx];
    }
    return "?";
}

void Laurent::reduce(Expo& e) const {
    int nv = grading_vars(tag_);
    for (int k = nv; k < 3; ++k) {
        if (e[k] != 0)
            throw std::logic_error("exponent outside grading group");
    }
    if (grading_has_torsion(tag_)) {
        int t = nv - 1;
        e[t] = ((e[t] % 2) + 2) % 2;
    }
}

Laurent Laurent::monomial(Grading g, Expo e, Integer c) {
    Laurent p(g);
    p.add_term(e, c);
    return p;
}

void Laurent::add_term(Expo e, const Integer& c) {
    if (c == 0)
        return;
    reduce(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (tag_ != o.tag_)
        throw std::invalid_argument("incompatible grading groups");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (tag_ != o.tag_)
        throw std::invalid_argument("incompatible grading groups");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r(tag_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.tag_ != b.tag_)
        throw std::invalid_argument("incompatible grading groups");
    Laurent r(a.tag_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

Laurent Laurent::specialize(Grading target, const Assignment& a) const {
    Laurent r(target);
    int nv = grading_vars(tag_);
    for (const auto& [e, c] : terms_) {
        Expo img{0, 0, 0};
        Integer coeff = c;
        for (int k = 0; k < nv; ++k) {
            int to = a.image[k];
            if (to == -1) {
                // variable -> 1
            } else if (to == -2) {
                if (e[k] % 2 != 0)
                    coeff = -coeff;
            } else {
                img[to] += e[k];
            }
        }
        r.add_term(img, coeff);
    }
    return r;
}

Laurent Laurent::q3_to_one() const {
    if (tag_ != Grading::TRI)
        throw std::invalid_argument("q3_to_one expects the trigraded ring");
    return specialize(Grading::BI, Assignment{{0, 1, -1}});
}

Integer Laurent::at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

std::string Laurent::text() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Expo, Integer>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int na = std::abs(a.first[0]) + std::abs(a.first[1]) + std::abs(a.first[2]);
        int nb = std::abs(b.first[0]) + std::abs(b.first[1]) + std::abs(b.first[2]);
        if (na != nb)
            return na < nb;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    int nv = grading_vars(tag_);
    for (const auto& [e, c] : sorted) {
        Integer cc = c;
        if (first) {
            if (cc < 0) {
                os << "-";
                cc = -cc;
            }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0)
                cc = -cc;
        }
        first = false;
        bool any_var = false;
        for (int k = 0; k < nv; ++k)
            if (e[k] != 0)
                any_var = true;
        std::ostringstream mono;
        bool started = false;
        for (int k = 0; k < nv; ++k) {
            if (e[k] == 0)
                continue;
            if (started)
                mono << "*";
            mono << grading_var_name(tag_, k);
            if (e[k] != 1)
                mono << "^" << e[k];
            started = true;
        }
        if (!any_var) {
            os << cc;
        } else {
            if (cc != 1)
                os << cc << "*";
            os << mono.str();
        }
    }
    return os.str();
}

namespace {

int var_index(Grading g, const std::string& name) {
    for (int k = 0; k < grading_vars(g); ++k)
        if (name == grading_var_name(g, k))
            return k;
    throw std::invalid_argument("unknown variable '" + name + "'");
}

}  // namespace

Laurent laurent_from_text(Grading g, const std::string& s) {
    Laurent out(g);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && isspace((unsigned char)s[i]))
            ++i;
    };
    skip_ws();
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size())
        return out;
    bool neg = false;
    while (i < s.size()) {
        skip_ws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
            skip_ws();
        }
        Integer coeff = 1;
        Expo e{0, 0, 0};
        bool saw = false;
        if (i < s.size() && isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (j < s.size() && isdigit((unsigned char)s[j]))
                ++j;
            coeff = Integer(s.substr(i, j - i));
            i = j;
            saw = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        while (i < s.size() && (s[i] == 'q' || s[i] == 's')) {
            size_t j = i;
            while (j < s.size() && (isalnum((unsigned char)s[j])) && s[j] != '^')
                ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            int ex = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < s.size() && s[i] == '-') {
                    eneg = true;
                    ++i;
                }
                size_t k = i;
                while (k < s.size() && isdigit((unsigned char)s[k]))
                    ++k;
                ex = std::stoi(s.substr(i, k - i));
                if (eneg)
                    ex = -ex;
                i = k;
            }
            e[var_index(g, name)] += ex;
            saw = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (!saw)
            throw std::invalid_argument("cannot parse polynomial '" + s + "'");
        out.add_term(e, neg ? -coeff : coeff);
        neg = false;
        skip_ws();
    }
    return out;
}

}  // namespace zz
