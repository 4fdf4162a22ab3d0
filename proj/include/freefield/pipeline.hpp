#ifndef FREEFIELD_PIPELINE_HPP
#define FREEFIELD_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "freefield/automaton.hpp"
#include "freefield/compile.hpp"
#include "freefield/expr.hpp"
#include "freefield/simplify.hpp"
#include "freefield/support.hpp"

namespace freefield {

struct PipelineOptions {
    std::optional<std::size_t> bound_override; // min-supp search bound
    std::size_t work_limit = 1'000'000;        // coefficient evaluations per min-supp
    ClosureOptions closure;
    /// Keep non-well-ordered (but word-proper) stars as literal geometric
    /// sums over the free group instead of rewriting them through
    /// (1 - a)^{-1}.  Literal mode answers questions about the series
    /// semantics; the default answers equality in the free field.
    bool literal_stars = false;
};

/// Result of running an expression through the whole pipeline.
struct Normalized {
    ExprPtr star_rational;           // inverse-free expression
    LinearRepresentation series;     // minimal simplification-free representation
    std::vector<std::string> warnings;
};

/// Rewrites every Inverse node through the geometric-series inversion
/// formula: with (a0, w0) the coefficient and element of the minimum of the
/// support, a^{-1} = a0^{-1} w0^{-1} [ sum_{w > w0} (-a_w a0^{-1}) w w0^{-1} ]^*.
/// User stars are validated (support envelope cycles and minimum both > 1);
/// a star that fails validation is rewritten as (1 - a)^{-1} and noted in
/// warnings, unless literal_stars is set.
ExprPtr eliminate_inverses(const ExprPtr& e, std::size_t n_generators,
                           const PipelineOptions& options = {},
                           std::vector<std::string>* warnings = nullptr);

/// eliminate_inverses, compile, remove simplifications, reduce.
Normalized normalize_expression(const ExprPtr& e, std::size_t n_generators,
                                const PipelineOptions& options = {});

bool is_zero_expression(const ExprPtr& e, std::size_t n_generators,
                        const PipelineOptions& options = {});

/// First reduced word (military order) with a nonzero coefficient; searches
/// lengths < dim, which must succeed for a nonzero reduced representation.
std::optional<std::pair<GroupElement, Rational>> nonzero_witness(const LinearRepresentation& r);

} // namespace freefield

#endif
