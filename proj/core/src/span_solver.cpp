#include "span_solver.hpp"

#include <tuple>

namespace gseq::detail {

SpanSolver::SpanSolver(const ESystem& grammar, std::int32_t num_vertices)
    : grammar_(grammar), n_(num_vertices) {
    // Register both polarities of every alphabet symbol up front so the
    // grammar indexes are stable.
    for (const auto& t : grammar.alphabet().types()) {
        sym_id(fwd(t));
        sym_id(inv(t));
    }
    index_grammar();
}

SymId SpanSolver::sym_id(const Symbol& s) {
    auto it = sym_ids_.find(s);
    if (it != sym_ids_.end()) return it->second;
    SymId id = num_syms_++;
    sym_ids_.emplace(s, id);
    sym_is_aux_.push_back(false);
    return id;
}

void SpanSolver::index_grammar() {
    auto fresh_aux = [&]() {
        SymId id = num_syms_++;
        sym_is_aux_.push_back(true);
        return id;
    };

    const auto& prods = grammar_.productions();
    for (std::size_t i = 0; i < prods.size(); ++i) {
        const Production& p = prods[i];
        SymId head = sym_id(p.lhs);
        const auto& rhs = p.rhs;
        std::int32_t orig = static_cast<std::int32_t>(i);
        if (rhs.empty()) {
            eps_prods_.emplace_back(head, orig);
        } else if (rhs.size() == 1) {
            unit_prods_.push_back({head, orig});
            // body index filled below once all symbols are known
            std::int32_t pid = static_cast<std::int32_t>(unit_prods_.size()) - 1;
            SymId body = sym_id(rhs[0]);
            if (static_cast<std::size_t>(body) >= units_by_body_.size())
                units_by_body_.resize(num_syms_);
            units_by_body_.resize(std::max<std::size_t>(units_by_body_.size(), num_syms_));
            units_by_body_[body].push_back(pid);
        } else {
            // Chain rhs = y1 ... yk into binary productions.
            SymId cur_head = head;
            bool cur_aux = false;
            for (std::size_t j = 0; j + 2 < rhs.size(); ++j) {
                SymId left = sym_id(rhs[j]);
                SymId aux = fresh_aux();
                bin_prods_.push_back({cur_head, left, aux, orig, cur_aux});
                cur_head = aux;
                cur_aux = true;
            }
            SymId left = sym_id(rhs[rhs.size() - 2]);
            SymId right = sym_id(rhs[rhs.size() - 1]);
            bin_prods_.push_back({cur_head, left, right, orig, cur_aux});
        }
    }

    units_by_body_.resize(num_syms_);
    bins_by_left_.resize(num_syms_);
    bins_by_right_.resize(num_syms_);
    for (std::size_t i = 0; i < bin_prods_.size(); ++i) {
        bins_by_left_[bin_prods_[i].left].push_back(static_cast<std::int32_t>(i));
        bins_by_right_[bin_prods_[i].right].push_back(static_cast<std::int32_t>(i));
    }
}

FactId SpanSolver::add_fact(SymId sym, std::int32_t src, std::int32_t dst, Reason reason) {
    auto key = std::make_tuple(sym, src, dst);
    auto it = fact_ids_.find(key);
    if (it != fact_ids_.end()) return it->second;
    FactId id = static_cast<FactId>(facts_.size());
    facts_.push_back({{sym, src, dst}, reason});
    fact_ids_.emplace(key, id);
    if (by_sym_src_.empty()) {
        by_sym_src_.resize(num_syms_);
        by_sym_dst_.resize(num_syms_);
    }
    by_sym_src_.resize(num_syms_);
    by_sym_dst_.resize(num_syms_);
    auto& src_bucket = by_sym_src_[sym];
    auto& dst_bucket = by_sym_dst_[sym];
    if (src_bucket.empty()) src_bucket.resize(n_);
    if (dst_bucket.empty()) dst_bucket.resize(n_);
    src_bucket[src].push_back(id);
    dst_bucket[dst].push_back(id);
    worklist_.push_back(id);
    return id;
}

void SpanSolver::add_base(const Symbol& sym, std::int32_t src, std::int32_t dst, std::int64_t tag) {
    Reason r;
    r.kind = Kind::Base;
    r.orig_prod = -1;
    r.tag = tag;
    add_fact(sym_id(sym), src, dst, r);
}

void SpanSolver::run() {
    if (ran_) return;
    ran_ = true;

    // ε-seeds only for symbols with a direct ε-production; chains close below.
    for (auto [head, orig] : eps_prods_) {
        for (std::int32_t v = 0; v < n_; ++v) {
            Reason r;
            r.kind = Kind::Eps;
            r.orig_prod = orig;
            add_fact(head, v, v, r);
        }
    }

    while (!worklist_.empty()) {
        FactId f = worklist_.back();
        worklist_.pop_back();
        SpanFact fact = facts_[f].fact;

        for (std::int32_t pid : units_by_body_[fact.sym]) {
            Reason r;
            r.kind = Kind::Unit;
            r.orig_prod = unit_prods_[pid].orig;
            r.left = f;
            add_fact(unit_prods_[pid].head, fact.src, fact.dst, r);
        }
        for (std::int32_t pid : bins_by_left_[fact.sym]) {
            const BinProd& bp = bin_prods_[pid];
            const auto& bucket = by_sym_src_[bp.right];
            if (bucket.empty()) continue;
            // copy: add_fact may grow the bucket we iterate
            std::vector<FactId> rights = bucket[fact.dst];
            for (FactId g : rights) {
                Reason r;
                r.kind = Kind::Binary;
                r.orig_prod = pid; // binary reasons store the *solver* production
                r.left = f;
                r.right = g;
                add_fact(bp.head, fact.src, facts_[g].fact.dst, r);
            }
        }
        for (std::int32_t pid : bins_by_right_[fact.sym]) {
            const BinProd& bp = bin_prods_[pid];
            const auto& bucket = by_sym_dst_[bp.left];
            if (bucket.empty()) continue;
            std::vector<FactId> lefts = bucket[fact.src];
            for (FactId g : lefts) {
                Reason r;
                r.kind = Kind::Binary;
                r.orig_prod = pid;
                r.left = g;
                r.right = f;
                add_fact(bp.head, facts_[g].fact.src, fact.dst, r);
            }
        }
    }
}

bool SpanSolver::has(const Symbol& sym, std::int32_t src, std::int32_t dst) const {
    auto it = sym_ids_.find(sym);
    if (it == sym_ids_.end()) return false;
    return fact_ids_.count(std::make_tuple(it->second, src, dst)) > 0;
}

void SpanSolver::collect_children(FactId f, std::vector<FactId>& out) const {
    // Flattens the binary chain of one original production application:
    // f's reason must be Binary; aux right-children are spliced in.
    const Rec& rec = facts_[f];
    out.push_back(rec.reason.left);
    FactId right = rec.reason.right;
    if (sym_is_aux_[facts_[right].fact.sym]) {
        collect_children(right, out);
    } else {
        out.push_back(right);
    }
}

std::size_t SpanSolver::expand(FactId f, std::size_t pos, Witness& out) const {
    const Rec& rec = facts_[f];
    switch (rec.reason.kind) {
    case Kind::Base:
        out.leaves.push_back({false, rec.fact.sym, rec.fact.src, rec.fact.dst, rec.reason.tag});
        return 1;
    case Kind::Eps:
        out.derivation.push_back({static_cast<std::size_t>(rec.reason.orig_prod), pos});
        out.leaves.push_back({true, rec.fact.sym, rec.fact.src, rec.fact.dst, 0});
        return 0;
    case Kind::Unit: {
        out.derivation.push_back({static_cast<std::size_t>(rec.reason.orig_prod), pos});
        return expand(rec.reason.left, pos, out);
    }
    case Kind::Binary: {
        const BinProd& bp = bin_prods_[rec.reason.orig_prod];
        out.derivation.push_back({static_cast<std::size_t>(bp.orig), pos});
        std::vector<FactId> children;
        collect_children(f, children);
        std::size_t len = 0;
        for (FactId c : children) len += expand(c, pos + len, out);
        return len;
    }
    }
    return 0;
}

std::optional<SpanSolver::Witness> SpanSolver::witness(const Symbol& sym, std::int32_t src,
                                                       std::int32_t dst) const {
    auto it = sym_ids_.find(sym);
    if (it == sym_ids_.end()) return std::nullopt;
    auto fit = fact_ids_.find(std::make_tuple(it->second, src, dst));
    if (fit == fact_ids_.end()) return std::nullopt;
    Witness w;
    expand(fit->second, 0, w);
    return w;
}

} // namespace gseq::detail
