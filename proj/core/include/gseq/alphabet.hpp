#ifndef GSEQ_ALPHABET_HPP
#define GSEQ_ALPHABET_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "gseq/error.hpp"

namespace gseq {

/// A finite, non-empty set of edge-type names, kept sorted.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> types) : types_(std::move(types)) {
        std::sort(types_.begin(), types_.end());
        types_.erase(std::unique(types_.begin(), types_.end()), types_.end());
        for (const auto& t : types_) {
            if (t.empty()) throw Error("alphabet: empty edge-type name");
        }
    }

    bool contains(const std::string& type) const {
        return std::binary_search(types_.begin(), types_.end(), type);
    }

    bool empty() const { return types_.empty(); }
    std::size_t size() const { return types_.size(); }
    const std::vector<std::string>& types() const { return types_; }

    bool operator==(const Alphabet&) const = default;

    /// Set containment, used when one calculus extends another.
    bool subset_of(const Alphabet& other) const {
        return std::includes(other.types_.begin(), other.types_.end(),
                             types_.begin(), types_.end());
    }

private:
    std::vector<std::string> types_;
};

/// One element of E ∪ inv(E): an edge type, possibly converse-marked.
struct Symbol {
    std::string base;
    bool barred = false;

    Symbol() = default;
    Symbol(std::string b, bool inv) : base(std::move(b)), barred(inv) {}

    Symbol converse() const { return Symbol(base, !barred); }

    auto operator<=>(const Symbol&) const = default;
};

/// Forward symbol a / converse symbol inv(a).
inline Symbol fwd(std::string base) { return Symbol(std::move(base), false); }
inline Symbol inv(std::string base) { return Symbol(std::move(base), true); }

/// A finite string over E ∪ inv(E); the empty vector is ε.
using EdgeString = std::vector<Symbol>;

/// Reverses the string and bars every symbol; involutive.
EdgeString converse(const EdgeString& s);

/// Text form: "a" or "inv(a)".
std::string to_string(const Symbol& sym);

/// Text form: "eps" for ε, otherwise space-separated symbols.
std::string to_string(const EdgeString& s);

/// Parses "a" / "inv(a)".
Symbol parse_symbol(const std::string& text);

/// True iff every symbol's base type is in the alphabet.
bool over_alphabet(const EdgeString& s, const Alphabet& alphabet);

} // namespace gseq

#endif
