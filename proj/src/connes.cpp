#include "freefield/connes.hpp"

#include <deque>
#include <functional>

#include "freefield/errors.hpp"
#include "freefield/parallel.hpp"

namespace freefield {

CayleyEdge::CayleyEdge(GroupElement w) : omega(std::move(w)) {
    if (omega.is_identity()) throw DomainError("Cayley edge requires omega != 1");
}

Rational TruncatedSeries::coefficient(const GroupElement& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add(const GroupElement& g, const Rational& c) {
    if (c == 0 || g.length() > radius_) return;
    auto it = coeffs_.find(g);
    if (it == coeffs_.end()) {
        coeffs_.emplace(g, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    for (const auto& [g, c] : other.coeffs_) add(g, c);
    return *this;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out(radius_);
    if (c == 0) return out;
    for (const auto& [g, k] : coeffs_) out.add(g, k * c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    TruncatedSeries out(std::min(radius_, other.radius_));
    for (const auto& [g, c] : coeffs_)
        for (const auto& [h, d] : other.coeffs_) out.add(group_mul(g, h), c * d);
    return out;
}

TruncatedSeries TruncatedSeries::star(std::size_t iteration_cap) const {
    if (coefficient(GroupElement()) != 0) throw DomainError("star undefined");
    if (iteration_cap == 0) iteration_cap = 4 * radius_ + 16;
    TruncatedSeries acc(radius_);
    acc.add(GroupElement(), 1);
    TruncatedSeries term = acc;
    for (std::size_t k = 0; k < iteration_cap; ++k) {
        term = term * *this;
        if (term.empty()) return acc;
        acc += term;
    }
    throw BudgetError("star iteration cap exceeded");
}

bool TruncatedSeries::equal_on_ball(const TruncatedSeries& other, std::size_t window) const {
    for (const auto& [g, c] : coeffs_)
        if (g.length() <= window && other.coefficient(g) != c) return false;
    for (const auto& [g, c] : other.coeffs_)
        if (g.length() <= window && coefficient(g) != c) return false;
    return true;
}

TruncatedSeries truncated_from_representation(const LinearRepresentation& r, std::size_t radius) {
    TruncatedSeries out(radius);
    for (auto& entry : kernels::ball_coefficients(r, radius))
        out.add(entry.element, entry.value);
    return out;
}

LinearRepresentation group_translate(const LinearRepresentation& r,
                                     const GroupElement& omega_bar) {
    return right_translate(r, omega_bar.word());
}

namespace {

/// Representation of the polynomial (y - 1) for a single letter y.
LinearRepresentation letter_minus_one(std::size_t n_generators, Letter y) {
    LinearRepresentation p;
    p.n_generators = n_generators;
    p.dim = 2;
    p.lambda = {Rational(1), Rational(0)};
    p.rho = {Rational(-1), Rational(1)};
    p.mu.assign(2 * n_generators, QMatrix(2, 2));
    p.mu[y.code()].at(0, 1) = 1;
    return p;
}

} // namespace

LinearRepresentation connes_apply(const LinearRepresentation& r, const CayleyEdge& e) {
    Letter last = e.omega.word().back();
    GroupElement omega_bar = group_inv(e.omega);
    LinearRepresentation translate = group_translate(r, omega_bar);
    return rep_product(translate, letter_minus_one(r.n_generators, last.inverse()));
}

TruncatedSeries connes_apply_truncated(const TruncatedSeries& a, const CayleyEdge& e) {
    const Word& omega = e.omega.word();
    GroupElement prefix = GroupElement::from_reduced(Word(omega.begin(), omega.end() - 1));
    TruncatedSeries out(a.radius());
    for (const auto& [alpha, c] : a.terms()) {
        // omega-bar must be a suffix of alpha (as reduced words)
        const Word& aw = alpha.word();
        if (aw.size() < omega.size()) continue;
        bool suffix = true;
        for (std::size_t i = 0; i < omega.size(); ++i)
            if (!(aw[aw.size() - omega.size() + i] == omega[omega.size() - 1 - i].inverse())) {
                suffix = false;
                break;
            }
        if (!suffix) continue;
        out.add(group_mul(alpha, prefix), c);
        out.add(group_mul(alpha, e.omega), -c);
    }
    return out;
}

namespace {

/// Formal linear combination of Cayley edges, keyed by the longer endpoint.
using EdgeSum = std::map<GroupElement, Rational, LenLexLess>;

void edge_sum_add(EdgeSum& sum, const GroupElement& omega, const Rational& c) {
    if (c == 0) return;
    auto it = sum.find(omega);
    if (it == sum.end()) {
        sum.emplace(omega, c);
    } else {
        it->second += c;
        if (it->second == 0) sum.erase(it);
    }
}

/// Left module action b · {p(ω), ω} = Σ b_β {β p(ω), β ω}; each image pair
/// is again a tree edge (endpoints differ by one letter), canonicalized by
/// its longer endpoint.
EdgeSum edge_action(const TruncatedSeries& b, const CayleyEdge& e) {
    GroupElement p = prefix_suffixes(e.omega).first;
    EdgeSum out;
    for (const auto& [beta, c] : b.terms()) {
        GroupElement u = group_mul(beta, p);
        GroupElement v = group_mul(beta, e.omega);
        edge_sum_add(out, u.length() > v.length() ? u : v, c);
    }
    return out;
}

TruncatedSeries apply_to_edge_sum(const TruncatedSeries& a, const EdgeSum& edges,
                                  std::size_t radius) {
    TruncatedSeries out(radius);
    for (const auto& [omega, c] : edges)
        out += connes_apply_truncated(a, CayleyEdge(omega)).scaled(c);
    return out;
}

void for_each_edge(std::size_t n_generators, std::size_t max_len,
                   const std::function<void(const CayleyEdge&)>& fn) {
    for_each_reduced_word(n_generators, max_len, [&](const Word& w) {
        if (!w.empty()) fn(CayleyEdge(GroupElement::from_reduced(w)));
        return true;
    });
}

/// Per-letter final-vector spaces W_y = span{ mu(u) rho : u reduced,
/// nonempty, starting with y }, closed by a worklist restricted to reduced
/// continuations: W_y = mu(y) ({rho} ∪ ⋃_{z != y-bar} W_z).
std::vector<RowSpace> translate_spaces(const LinearRepresentation& r) {
    std::size_t letters = 2 * r.n_generators;
    std::vector<RowSpace> spaces(letters, RowSpace(r.dim));
    std::vector<std::vector<QVector>> basis(letters);
    std::deque<std::pair<std::uint32_t, QVector>> worklist;

    auto offer = [&](std::uint32_t y, QVector v) {
        if (spaces[y].insert(v)) {
            basis[y].push_back(v);
            worklist.emplace_back(y, std::move(v));
        }
    };
    for (std::uint32_t y = 0; y < letters; ++y) offer(y, matrix_times_col(r.mu[y], r.rho));
    while (!worklist.empty()) {
        auto [z, v] = std::move(worklist.front());
        worklist.pop_front();
        for (std::uint32_t y = 0; y < letters; ++y) {
            if (Letter::from_code(y).inverse() == Letter::from_code(z)) continue;
            offer(y, matrix_times_col(r.mu[y], v));
        }
    }
    return spaces;
}

} // namespace

std::size_t connes_rank_exact(const LinearRepresentation& r) {
    if (r.dim == 0) return 0;
    std::size_t letters = 2 * r.n_generators;
    std::vector<RowSpace> spaces = translate_spaces(r);

    // Enlarged observability space: every coefficient functional of a
    // series (lambda, mu, v)(y - 1) is a row (w against the main block,
    // w-minus-last-letter against the slot of y); their span is generated
    // by (lambda | 0) and, per letter l, the forward basis pushed through
    // mu(l) with its copy in slot l.
    std::size_t big = r.dim * (1 + letters);
    RowSpace observability(big);
    {
        QVector row(big, Rational(0));
        for (std::size_t i = 0; i < r.dim; ++i) row[i] = r.lambda[i];
        observability.insert(std::move(row));
    }
    RowSpace fwd = forward_space(r);
    for (std::uint32_t code = 0; code < letters; ++code)
        for (std::size_t b = 0; b < fwd.dim(); ++b) {
            const QVector& v = fwd.row(b);
            QVector pushed = row_times_matrix(v, r.mu[code]);
            QVector row(big, Rational(0));
            for (std::size_t i = 0; i < r.dim; ++i) row[i] = pushed[i];
            for (std::size_t i = 0; i < r.dim; ++i) row[r.dim * (1 + code) + i] = v[i];
            observability.insert(std::move(row));
        }

    // Image rank: final vectors (-v | v at slot of x-bar) for v in the
    // space of the letter x ending omega, projected onto the observability
    // rows.
    RowSpace image(observability.dim());
    for (std::uint32_t x = 0; x < letters; ++x) {
        std::uint32_t slot = Letter::from_code(x).inverse().code();
        const RowSpace& vx = spaces[Letter::from_code(x).inverse().code()];
        for (std::size_t b = 0; b < vx.dim(); ++b) {
            const QVector& v = vx.row(b);
            QVector big_rho(big, Rational(0));
            for (std::size_t i = 0; i < r.dim; ++i) big_rho[i] = -v[i];
            for (std::size_t i = 0; i < r.dim; ++i) big_rho[r.dim * (1 + slot) + i] = v[i];
            QVector projected(observability.dim(), Rational(0));
            for (std::size_t o = 0; o < observability.dim(); ++o)
                projected[o] = dot(observability.row(o), big_rho);
            image.insert(std::move(projected));
        }
    }
    return image.dim();
}

TruncatedRank connes_rank_truncated(const LinearRepresentation& r, std::size_t depth,
                                    std::size_t window) {
    // Index the coefficient ball once.
    std::vector<Word> ball;
    for_each_reduced_word(r.n_generators, window, [&](const Word& w) {
        ball.push_back(w);
        return true;
    });
    TruncatedRank out{0, 0};
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t d = depth + static_cast<std::size_t>(pass);
        RowSpace rows(ball.size());
        for_each_edge(r.n_generators, d, [&](const CayleyEdge& e) {
            LinearRepresentation fe = connes_apply(r, e);
            TruncatedSeries s = truncated_from_representation(fe, window);
            QVector coeffs(ball.size(), Rational(0));
            for (std::size_t i = 0; i < ball.size(); ++i)
                coeffs[i] = s.coefficient(GroupElement::from_reduced(ball[i]));
            rows.insert(std::move(coeffs));
        });
        (pass == 0 ? out.rank_at_depth : out.rank_at_depth_plus) = rows.dim();
    }
    return out;
}

std::size_t group_hankel_rank(const LinearRepresentation& r) {
    if (r.dim == 0) return 0;
    std::size_t letters = 2 * r.n_generators;
    std::vector<RowSpace> spaces = translate_spaces(r);
    RowSpace fwd = forward_space(r);
    RowSpace image(fwd.dim());
    for (std::uint32_t y = 0; y < letters; ++y)
        for (std::size_t b = 0; b < spaces[y].dim(); ++b) {
            const QVector& v = spaces[y].row(b);
            QVector projected(fwd.dim(), Rational(0));
            for (std::size_t o = 0; o < fwd.dim(); ++o) projected[o] = dot(fwd.row(o), v);
            image.insert(std::move(projected));
        }
    return image.dim();
}

namespace {

std::size_t operand_radius(std::size_t depth) { return 2 * depth + 4; }

} // namespace

bool verify_connes_identities(const LinearRepresentation& a, const LinearRepresentation& b,
                              std::size_t depth) {
    if (a.n_generators != b.n_generators) throw DomainError("alphabet mismatch");
    std::size_t radius = operand_radius(depth);
    TruncatedSeries at = truncated_from_representation(a, radius);
    TruncatedSeries bt = truncated_from_representation(b, radius);
    TruncatedSeries ab = at * bt;
    bool ok = true;
    for_each_edge(a.n_generators, depth, [&](const CayleyEdge& e) {
        if (!ok) return;
        TruncatedSeries lhs = connes_apply_truncated(ab, e);
        TruncatedSeries rhs = apply_to_edge_sum(at, edge_action(bt, e), radius);
        rhs += at * connes_apply_truncated(bt, e);
        if (!lhs.equal_on_ball(rhs, depth)) ok = false;
    });
    return ok;
}

bool verify_connes_star_identity(const LinearRepresentation& a, std::size_t depth) {
    std::size_t radius = operand_radius(depth);
    TruncatedSeries at = truncated_from_representation(a, radius);
    TruncatedSeries star = at.star(); // throws "star undefined" when (a,1) != 0
    bool ok = true;
    for_each_edge(a.n_generators, depth, [&](const CayleyEdge& e) {
        if (!ok) return;
        TruncatedSeries lhs = connes_apply_truncated(star, e);
        TruncatedSeries rhs = star * apply_to_edge_sum(at, edge_action(star, e), radius);
        if (!lhs.equal_on_ball(rhs, depth)) ok = false;
    });
    return ok;
}

} // namespace freefield
