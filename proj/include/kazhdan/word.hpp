#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "element.hpp"
#include "error.hpp"

namespace kz {

struct Letter {
    char sym;
    int exp; // +1 or -1
    bool operator==(const Letter& o) const { return sym == o.sym && exp == o.exp; }
    bool operator<(const Letter& o) const { return sym != o.sym ? sym < o.sym : exp < o.exp; }
};

/// A freely reduced word over single-character symbols.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : l_(std::move(letters)) { reduce(); }

    static Word gen(char s, int e = 1) {
        Word w;
        for (int i = 0; i < std::abs(e); ++i) w.l_.push_back({s, e > 0 ? 1 : -1});
        return w;
    }

    const std::vector<Letter>& letters() const { return l_; }
    size_t length() const { return l_.size(); }
    bool empty() const { return l_.empty(); }

    Word operator*(const Word& o) const {
        std::vector<Letter> v = l_;
        v.insert(v.end(), o.l_.begin(), o.l_.end());
        return Word(std::move(v));
    }
    Word inverse() const {
        std::vector<Letter> v;
        for (auto it = l_.rbegin(); it != l_.rend(); ++it) v.push_back({it->sym, -it->exp});
        return Word(std::move(v));
    }
    Word pow(int n) const {
        Word base = n < 0 ? inverse() : *this, r;
        for (int i = 0; i < std::abs(n); ++i) r = r * base;
        return r;
    }

    /// Substitute a word for each symbol (symbols without an image are kept).
    Word substitute(const std::map<char, Word>& m) const {
        Word r;
        for (auto& x : l_) {
            auto it = m.find(x.sym);
            Word piece = it == m.end() ? gen(x.sym) : it->second;
            r = r * (x.exp > 0 ? piece : piece.inverse());
        }
        return r;
    }

    /// Drop inverse pairs wrapping around the ends.
    Word cyclic_reduce() const {
        std::vector<Letter> v = l_;
        size_t i = 0, j = v.size();
        while (j - i >= 2 && v[i].sym == v[j - 1].sym && v[i].exp == -v[j - 1].exp) {
            ++i;
            --j;
        }
        return Word(std::vector<Letter>(v.begin() + long(i), v.begin() + long(j)));
    }

    /// Least cyclic rotation of the word or its inverse, after cyclic reduction.
    Word canonical_relator() const {
        Word w = cyclic_reduce();
        if (w.empty()) return w;
        std::vector<Letter> best;
        for (const Word& c : {w, w.inverse()}) {
            const auto& v = c.l_;
            for (size_t k = 0; k < v.size(); ++k) {
                std::vector<Letter> r(v.begin() + long(k), v.end());
                r.insert(r.end(), v.begin(), v.begin() + long(k));
                if (best.empty() || r < best) best = r;
            }
        }
        Word out;
        out.l_ = best;
        return out;
    }

    /// Capital letters for inverses, e.g. "abAB".
    std::string compact() const {
        std::string s;
        for (auto& x : l_) s.push_back(x.exp > 0 ? x.sym : char(std::toupper(x.sym)));
        return s;
    }

    /// Exponent notation with runs collapsed, e.g. "a^-1b^2".
    std::string to_string() const {
        if (l_.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < l_.size();) {
            size_t j = i;
            while (j < l_.size() && l_[j] == l_[i]) ++j;
            long e = long(j - i) * l_[i].exp;
            s.push_back(l_[i].sym);
            if (e != 1) s += "^" + std::to_string(e);
            i = j;
        }
        return s;
    }

    bool operator==(const Word& o) const { return l_ == o.l_; }
    bool operator<(const Word& o) const { return l_ < o.l_; }

private:
    std::vector<Letter> l_;

    void reduce() {
        std::vector<Letter> out;
        for (auto& x : l_) {
            if (!out.empty() && out.back().sym == x.sym && out.back().exp == -x.exp) out.pop_back();
            else out.push_back(x);
        }
        l_ = std::move(out);
    }
};

/// [x,y] = x^-1 y^-1 x y
inline Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

/// [x1,...,xn] = [[x1,...,x(n-1)],xn]
inline Word commutator(const std::vector<Word>& xs) {
    if (xs.empty()) return Word();
    Word r = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) r = commutator(r, xs[i]);
    return r;
}

namespace detail {

class WordParser {
public:
    explicit WordParser(const std::string& s) : s_(s) {}

    Word parse() {
        Word w = sequence();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return w;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& m) {
        throw Error(Errc::ParseError, m + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (i_ < s_.size() && (std::isspace((unsigned char)s_[i_]) || s_[i_] == '*' || s_[i_] == '.')) ++i_;
    }
    Word sequence() {
        Word w;
        for (;;) {
            skip();
            if (i_ >= s_.size() || s_[i_] == ')' || s_[i_] == ']' || s_[i_] == ',') return w;
            w = w * item();
        }
    }
    Word item() {
        Word a = atom();
        skip();
        if (i_ < s_.size() && s_[i_] == '^') {
            ++i_;
            skip();
            bool neg = false;
            if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
            if (i_ >= s_.size() || !std::isdigit((unsigned char)s_[i_])) fail("expected exponent");
            int e = 0;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) e = e * 10 + (s_[i_++] - '0');
            a = a.pow(neg ? -e : e);
        }
        return a;
    }
    Word atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char ch = s_[i_];
        if (ch == '(') {
            ++i_;
            Word w = sequence();
            if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
            ++i_;
            return w;
        }
        if (ch == '[') {
            ++i_;
            std::vector<Word> parts{sequence()};
            while (i_ < s_.size() && s_[i_] == ',') {
                ++i_;
                parts.push_back(sequence());
            }
            if (i_ >= s_.size() || s_[i_] != ']') fail("expected ']'");
            ++i_;
            if (parts.size() < 2) fail("commutator needs two entries");
            return commutator(parts);
        }
        if (std::isalpha((unsigned char)ch)) {
            ++i_;
            if (std::islower((unsigned char)ch)) return Word::gen(ch, 1);
            return Word::gen(char(std::tolower((unsigned char)ch)), -1);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }
};

} // namespace detail

/// Parse "aba^-1", "abAB", "(ab)^3", "[a,b,b]"; capitals denote inverses.
inline Word parse_word(const std::string& s) { return detail::WordParser(s).parse(); }

using Assignment = std::map<char, GroupElement>;

inline GroupElement evaluate_word(const Word& w, const Assignment& as) {
    if (as.empty()) throw Error(Errc::UnassignedSymbol, "empty assignment");
    for (auto& x : w.letters())
        if (!as.count(x.sym)) throw Error(Errc::UnassignedSymbol, std::string("symbol '") + x.sym + "' has no image");
    const Space& sp = as.begin()->second.space();
    std::map<char, GroupElement> inv;
    GroupElement r = GroupElement::identity(sp);
    for (auto& x : w.letters()) {
        const GroupElement& g = as.at(x.sym);
        if (x.exp > 0) {
            r = r * g;
        } else {
            auto it = inv.find(x.sym);
            if (it == inv.end()) it = inv.emplace(x.sym, g.inverse()).first;
            r = r * it->second;
        }
    }
    return r;
}

struct RelatorCheck {
    Word relator;
    bool holds;
};

struct PresentationCheck {
    std::vector<RelatorCheck> relators;
    bool all_pass() const {
        return std::all_of(relators.begin(), relators.end(), [](const RelatorCheck& r) { return r.holds; });
    }
    size_t failures() const {
        return size_t(std::count_if(relators.begin(), relators.end(), [](const RelatorCheck& r) { return !r.holds; }));
    }
};

inline PresentationCheck verify_presentation(const std::vector<Word>& relators, const Assignment& as) {
    PresentationCheck out;
    for (auto& r : relators) out.relators.push_back({r, evaluate_word(r, as).is_identity()});
    return out;
}

/// "<a,b | a^3, b^3, abAB>" style text.
inline std::string presentation_text(const std::string& gens, const std::vector<Word>& relators) {
    std::string s = "<";
    for (size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::string(1, gens[i]);
    s += " | ";
    for (size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : "") + relators[i].to_string();
    return s + ">";
}

} // namespace kz
