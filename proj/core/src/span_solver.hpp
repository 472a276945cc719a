#ifndef GSEQ_SPAN_SOLVER_HPP
#define GSEQ_SPAN_SOLVER_HPP

// Internal saturation engine. Treats every symbol of E ∪ inv(E) as a
// nonterminal, seeds base spans from single-symbol facts, and closes
// Datalog-style under the productions of an E-system (binarized with
// auxiliary symbols). Used by solve_reach (spans over g-sequent vertices)
// and by language_member (spans over string positions).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gseq/rewriting.hpp"

namespace gseq::detail {

using SymId = std::int32_t;
using FactId = std::int32_t;

struct SpanFact {
    SymId sym;
    std::int32_t src;
    std::int32_t dst;
};

class SpanSolver {
public:
    SpanSolver(const ESystem& grammar, std::int32_t num_vertices);

    /// Registers a user symbol (alphabet symbol, either polarity).
    SymId sym_id(const Symbol& s);

    /// Adds a base fact: `sym` spans (src, dst) as a one-symbol walk.
    /// `tag` is caller data recovered during witness reconstruction.
    void add_base(const Symbol& sym, std::int32_t src, std::int32_t dst, std::int64_t tag);

    /// Runs the fixpoint. Idempotent.
    void run();

    bool has(const Symbol& sym, std::int32_t src, std::int32_t dst) const;

    /// Witness leaves of one derivation of the fact, in walk order.
    /// Each leaf is either a base fact (carries the caller tag) or an
    /// ε-span (no tag). Also reconstructs the leftmost derivation over
    /// the original productions.
    struct Leaf {
        bool is_eps;
        SymId sym;
        std::int32_t src;
        std::int32_t dst;
        std::int64_t tag; // valid when !is_eps
    };
    struct Witness {
        std::vector<Leaf> leaves;
        std::vector<RewriteStep> derivation;
    };
    std::optional<Witness> witness(const Symbol& sym, std::int32_t src, std::int32_t dst) const;

private:
    enum class Kind : std::uint8_t { Base, Eps, Unit, Binary };

    struct Reason {
        Kind kind;
        std::int32_t orig_prod; // original production index; -1 for Base
        FactId left = -1;
        FactId right = -1;
        std::int64_t tag = 0;  // Base only
    };

    struct UnitProd {
        SymId head;
        std::int32_t orig;
    };
    struct BinProd {
        SymId head;
        SymId left;
        SymId right;
        std::int32_t orig;   // original production index
        bool head_is_aux;    // head is a binarization symbol
    };

    struct Rec {
        SpanFact fact;
        Reason reason;
    };

    FactId add_fact(SymId sym, std::int32_t src, std::int32_t dst, Reason reason);

    // Expands a fact into original-production tree leaves + derivation.
    // `pos` is the running leftmost-derivation position.
    std::size_t expand(FactId f, std::size_t pos, Witness& out) const;
    // Collects the child facts of a (possibly aux-chained) production body.
    void collect_children(FactId f, std::vector<FactId>& out) const;

    const ESystem& grammar_;
    std::int32_t n_;
    bool ran_ = false;

    std::map<Symbol, SymId> sym_ids_;
    std::vector<bool> sym_is_aux_;
    std::int32_t num_syms_ = 0;

    // production indexes
    std::vector<std::vector<std::int32_t>> units_by_body_;  // body sym -> unit prod ids
    std::vector<UnitProd> unit_prods_;
    std::vector<std::vector<std::int32_t>> bins_by_left_;
    std::vector<std::vector<std::int32_t>> bins_by_right_;
    std::vector<BinProd> bin_prods_;
    std::vector<std::pair<SymId, std::int32_t>> eps_prods_; // (head, orig)

    std::vector<Rec> facts_;
    std::map<std::tuple<SymId, std::int32_t, std::int32_t>, FactId> fact_ids_;
    std::vector<std::vector<std::vector<FactId>>> by_sym_src_; // [sym][src] -> facts
    std::vector<std::vector<std::vector<FactId>>> by_sym_dst_; // [sym][dst] -> facts
    std::vector<FactId> worklist_;

    void index_grammar();
};

} // namespace gseq::detail

#endif
