#include "gseq/alphabet.hpp"

namespace gseq {

EdgeString converse(const EdgeString& s) {
    EdgeString out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(it->converse());
    return out;
}

std::string to_string(const Symbol& sym) {
    return sym.barred ? "inv(" + sym.base + ")" : sym.base;
}

std::string to_string(const EdgeString& s) {
    if (s.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += to_string(s[i]);
    }
    return out;
}

Symbol parse_symbol(const std::string& text) {
    if (text.size() > 5 && text.compare(0, 4, "inv(") == 0 && text.back() == ')') {
        std::string base = text.substr(4, text.size() - 5);
        if (base.empty()) throw Error("parse_symbol: empty base in '" + text + "'");
        return inv(base);
    }
    if (text.empty() || text == "eps") throw Error("parse_symbol: invalid symbol '" + text + "'");
    return fwd(text);
}

bool over_alphabet(const EdgeString& s, const Alphabet& alphabet) {
    for (const auto& sym : s) {
        if (!alphabet.contains(sym.base)) return false;
    }
    return true;
}

} // namespace gseq
