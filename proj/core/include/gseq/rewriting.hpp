#ifndef GSEQ_REWRITING_HPP
#define GSEQ_REWRITING_HPP

#include <compare>
#include <optional>
#include <vector>

#include "gseq/alphabet.hpp"

namespace gseq {

/// A production rule x -> y1 ... yn with a single-symbol left-hand side.
struct Production {
    Symbol lhs;
    EdgeString rhs;

    Production() = default;
    Production(Symbol l, EdgeString r) : lhs(std::move(l)), rhs(std::move(r)) {}

    /// inv(x) -> inv(yn) ... inv(y1)
    Production converse_production() const { return Production(lhs.converse(), converse(rhs)); }

    auto operator<=>(const Production&) const = default;
};

std::string to_string(const Production& p);

/// A semi-Thue system over E ∪ inv(E) with single-symbol left-hand sides,
/// closed under converses. Productions are stored sorted and deduplicated,
/// so equality is decidable set equality.
class ESystem {
public:
    ESystem() = default;

    /// Validating constructor: requires converse closure.
    ESystem(Alphabet alphabet, std::vector<Production> productions);

    /// Smallest converse-closed superset of `rules`.
    static ESystem close_under_converse(Alphabet alphabet, std::vector<Production> rules);

    static ESystem empty(Alphabet alphabet) { return ESystem(std::move(alphabet), {}); }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Production>& productions() const { return productions_; }
    bool is_empty() const { return productions_.empty(); }
    std::size_t size() const { return productions_.size(); }

    bool contains(const Production& p) const;
    bool subset_of(const ESystem& other) const;

    bool operator==(const ESystem&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Production> productions_;
};

/// Set union / set difference of production sets; converse closure is
/// preserved because every operand is closed.
ESystem grammar_union(const ESystem& g1, const ESystem& g2);
ESystem grammar_minus(const ESystem& g1, const ESystem& g2);

/// A production together with its converse. Canonical orientation: the
/// member with the smaller (lhs, rhs) encoding is stored first.
struct ProductionPair {
    Production first;
    Production second;

    ProductionPair() = default;
    ProductionPair(const Production& p, const Production& q);

    /// The member whose left-hand side is unbarred. Every pair has exactly
    /// one such member since the two left-hand sides are x and inv(x).
    const Production& forward_member() const;

    auto operator<=>(const ProductionPair&) const = default;
};

std::string to_string(const ProductionPair& pair);

/// Partitions a converse-closed system into production pairs. A
/// self-converse production pairs with itself.
std::vector<ProductionPair> production_pairs(const ESystem& g);

/// Inverse of production_pairs: all rules found in some pair of P.
ESystem grammar_of_pairs(const Alphabet& alphabet, const std::vector<ProductionPair>& pairs);

/// One rewrite step: production index into g.productions() and the
/// position in the string where its lhs was replaced.
struct RewriteStep {
    std::size_t production;
    std::size_t position;
};

struct DerivationWitness {
    std::vector<RewriteStep> steps; // applied left to right starting from s
};

/// Bounded string-to-string derivability s ->*_G t, by breadth-first
/// closure of the rewrite relation up to max_steps applications.
/// The unbounded query is decided exactly only when |s| = 1 (language
/// membership); multi-symbol unbounded queries are refused.
bool derives(const ESystem& g, const EdgeString& s, const EdgeString& t,
             std::optional<std::size_t> max_steps,
             DerivationWitness* witness = nullptr);

/// Exact membership t ∈ G(x) for a single start symbol, via the interval
/// saturation shared with the reachability solver.
bool language_member(const ESystem& g, const Symbol& start, const EdgeString& t);

} // namespace gseq

#endif
