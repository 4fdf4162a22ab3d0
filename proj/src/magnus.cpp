#include "freefield/magnus.hpp"

#include <algorithm>

#include "freefield/errors.hpp"

namespace freefield {

MonoidPolynomial MonoidPolynomial::monomial(Word w, Integer c) {
    MonoidPolynomial p;
    p.add(w, c);
    return p;
}

void MonoidPolynomial::add(const Word& w, const Integer& c) {
    if (c == 0) return;
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) {
        coeffs_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

MonoidPolynomial& MonoidPolynomial::operator+=(const MonoidPolynomial& other) {
    for (const auto& [w, c] : other.coeffs_) add(w, c);
    return *this;
}

MonoidPolynomial MonoidPolynomial::operator+(const MonoidPolynomial& other) const {
    MonoidPolynomial out = *this;
    out += other;
    return out;
}

MonoidPolynomial MonoidPolynomial::scaled(const Integer& c) const {
    MonoidPolynomial out;
    if (c == 0) return out;
    for (const auto& [w, k] : coeffs_) out.coeffs_.emplace(w, k * c);
    return out;
}

Integer MonoidPolynomial::coefficient(const Word& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

const Word& MonoidPolynomial::leading_word() const {
    if (coeffs_.empty()) throw DomainError("leading word of the zero polynomial");
    return coeffs_.rbegin()->first;
}

namespace {

void check_unbarred(const Word& w) {
    for (const Letter& l : w)
        if (l.barred) throw DomainError("word must be unbarred here");
}

} // namespace

std::vector<Word> lyndon_words(std::size_t n_generators, std::size_t max_len) {
    std::vector<Word> out;
    if (n_generators == 0 || max_len == 0) return out;
    // Duval's generation: lexicographic order, lengths <= max_len.
    std::vector<std::uint32_t> w{0};
    while (!w.empty()) {
        Word word;
        word.reserve(w.size());
        for (std::uint32_t g : w) word.push_back(Letter(g, false));
        out.push_back(std::move(word));
        std::vector<std::uint32_t> t;
        t.reserve(max_len);
        for (std::size_t i = 0; i < max_len; ++i) t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == n_generators - 1) t.pop_back();
        if (!t.empty()) t.back() += 1;
        w = std::move(t);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    check_unbarred(w);
    for (std::size_t r = 1; r < w.size(); ++r) {
        // compare w with its rotation by r
        Word rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        bool less = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].index != rot[i].index) {
                less = w[i].index < rot[i].index;
                break;
            }
        }
        if (!less) return false;
    }
    return true;
}

std::vector<std::pair<Word, std::size_t>> lyndon_factorization(const Word& w) {
    check_unbarred(w);
    // Duval's factorization into a nonincreasing sequence of Lyndon words.
    std::vector<Word> factors;
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t i = k, j = k + 1;
        while (j < w.size() && w[i].index <= w[j].index) {
            i = (w[i].index < w[j].index) ? k : i + 1;
            ++j;
        }
        std::size_t len = j - i;
        while (k <= i) {
            factors.emplace_back(w.begin() + k, w.begin() + k + len);
            k += len;
        }
    }
    std::vector<std::pair<Word, std::size_t>> out;
    for (const Word& f : factors) {
        if (!out.empty() && out.back().first == f)
            out.back().second += 1;
        else
            out.emplace_back(f, 1);
    }
    return out;
}

namespace {

MonoidPolynomial word_shuffle(const Word& u, const Word& v) {
    if (u.empty()) return MonoidPolynomial::monomial(v);
    if (v.empty()) return MonoidPolynomial::monomial(u);
    Word u_tail(u.begin() + 1, u.end());
    Word v_tail(v.begin() + 1, v.end());
    MonoidPolynomial out;
    MonoidPolynomial left = word_shuffle(u_tail, v);
    for (const auto& [w, c] : left.terms()) {
        Word t{u.front()};
        t.insert(t.end(), w.begin(), w.end());
        out.add(t, c);
    }
    MonoidPolynomial right = word_shuffle(u, v_tail);
    for (const auto& [w, c] : right.terms()) {
        Word t{v.front()};
        t.insert(t.end(), w.begin(), w.end());
        out.add(t, c);
    }
    return out;
}

MonoidPolynomial word_infiltration(const Word& u, const Word& v) {
    if (u.empty()) return MonoidPolynomial::monomial(v);
    if (v.empty()) return MonoidPolynomial::monomial(u);
    Word u_tail(u.begin() + 1, u.end());
    Word v_tail(v.begin() + 1, v.end());
    MonoidPolynomial out;
    MonoidPolynomial left = word_infiltration(u_tail, v);
    for (const auto& [w, c] : left.terms()) {
        Word t{u.front()};
        t.insert(t.end(), w.begin(), w.end());
        out.add(t, c);
    }
    MonoidPolynomial right = word_infiltration(u, v_tail);
    for (const auto& [w, c] : right.terms()) {
        Word t{v.front()};
        t.insert(t.end(), w.begin(), w.end());
        out.add(t, c);
    }
    if (u.front() == v.front()) {
        // overlap: the two leading letters merge
        MonoidPolynomial both = word_infiltration(u_tail, v_tail);
        for (const auto& [w, c] : both.terms()) {
            Word t{u.front()};
            t.insert(t.end(), w.begin(), w.end());
            out.add(t, c);
        }
    }
    return out;
}

using ZMatrix = std::vector<std::vector<Integer>>;

ZMatrix z_identity(std::size_t n) {
    ZMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b) {
    std::size_t n = a.size();
    ZMatrix out(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j] == 0) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

/// Inverse of a unipotent upper-triangular integer matrix: with N = M - I
/// nilpotent, M^{-1} = I - N + N^2 - ...; exact over Z.
ZMatrix z_unipotent_inverse(const ZMatrix& m) {
    std::size_t n = m.size();
    ZMatrix nil = m;
    for (std::size_t i = 0; i < n; ++i) nil[i][i] -= 1;
    ZMatrix out = z_identity(n);
    ZMatrix power = z_identity(n);
    for (std::size_t k = 1; k < n; ++k) {
        power = z_mul(power, nil);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (k % 2 == 0)
                    out[i][j] += power[i][j];
                else
                    out[i][j] -= power[i][j];
    }
    return out;
}

} // namespace

MonoidPolynomial shuffle(const MonoidPolynomial& p, const MonoidPolynomial& q) {
    MonoidPolynomial out;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) out += word_shuffle(u, v).scaled(cu * cv);
    return out;
}

MonoidPolynomial infiltration(const MonoidPolynomial& p, const MonoidPolynomial& q) {
    MonoidPolynomial out;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) out += word_infiltration(u, v).scaled(cu * cv);
    return out;
}

Integer subword_count(const GroupElement& omega, const Word& v) {
    if (v.empty()) throw DomainError("subword count against the empty word");
    check_unbarred(v);
    std::size_t n = v.size() + 1;
    // mu_v(x) = I + sum of E_{i,i+1} over positions i with v[i] = x: the
    // (n)-state automaton for v ⧢ X* with self-loops everywhere.
    auto mu_of = [&](const Letter& l) {
        ZMatrix m = z_identity(n);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i].index == l.index) m[i][i + 1] = 1;
        if (l.barred) m = z_unipotent_inverse(m);
        return m;
    };
    ZMatrix acc = z_identity(n);
    for (const Letter& l : omega.word()) acc = z_mul(acc, mu_of(l));
    return acc[0][n - 1];
}

MonoidPolynomial magnus_truncated(const GroupElement& omega, std::size_t degree) {
    MonoidPolynomial acc = MonoidPolynomial::one();
    for (const Letter& l : omega.word()) {
        MonoidPolynomial letter_poly = MonoidPolynomial::one();
        if (!l.barred) {
            letter_poly.add(Word{l}, 1);
        } else {
            // (1 + x)^{-1} = sum (-x)^k, truncated
            Word pw;
            Integer sign = 1;
            for (std::size_t k = 1; k <= degree; ++k) {
                pw.push_back(Letter(l.index, false));
                sign = -sign;
                letter_poly.add(pw, sign);
            }
        }
        MonoidPolynomial next;
        for (const auto& [u, cu] : acc.terms()) {
            if (u.size() > degree) continue;
            for (const auto& [w, cw] : letter_poly.terms()) {
                if (u.size() + w.size() > degree) continue;
                Word t = u;
                t.insert(t.end(), w.begin(), w.end());
                next.add(t, cu * cw);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Order magnus_compare(const GroupElement& a, const GroupElement& b, const MagnusOptions& options,
                     MagnusWitness* witness) {
    if (a == b) return Order::Equal;
    std::size_t cap = options.length_cap ? options.length_cap : a.length() + b.length() + 4;
    std::uint32_t max_index = 0;
    for (const Letter& l : a.word()) max_index = std::max(max_index, l.index);
    for (const Letter& l : b.word()) max_index = std::max(max_index, l.index);
    // Lyndon words using absent generators have subword count 0 on both
    // sides, so restricting to the letters that occur is sound.
    std::size_t n = max_index + 1;
    const std::size_t candidate_budget = 200000;
    std::size_t examined = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
        for (const Word& l : lyndon_words(n, len)) {
            if (l.size() != len) continue;
            if (++examined > candidate_budget) throw BudgetError("comparison budget exceeded");
            Integer ca = subword_count(a, l);
            Integer cb = subword_count(b, l);
            if (ca == cb) continue;
            if (witness) *witness = MagnusWitness{l, ca, cb};
            return ca < cb ? Order::Less : Order::Greater;
        }
    }
    throw BudgetError("comparison budget exceeded");
}

} // namespace freefield
