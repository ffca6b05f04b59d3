#pragma once

// Textual graph notation.
//
//   graph := "co-" graph | sum            co- complements the whole remainder
//   sum   := term ("+" term)*
//   term  := [count] atom
//   atom  := K<n> | K<a>,<b> | K<n>-e | E<n> | P<n> | C<n> | paw
//
// Examples: "2K3", "K1,3", "co-P3+K1", "K4-e", "3K2".  Whitespace is
// insignificant.  Strings that are not valid notation fall back to graph6;
// a "g6:" prefix skips the notation parser entirely.

#include <cctype>
#include <string>

#include "hexact/graph.hpp"

namespace hexact {

namespace detail {

class NameParser {
  public:
    explicit NameParser(const std::string& text) : s_(strip(text)) {}

    SmallGraph parse() {
        SmallGraph g = parse_graph_expr();
        require(pos_ == s_.size(), "unexpected trailing characters");
        return g;
    }

  private:
    static std::string strip(const std::string& text) {
        std::string out;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
        return out;
    }

    bool eat(const char* lit) {
        std::size_t len = 0;
        while (lit[len] != '\0') ++len;
        if (s_.compare(pos_, len, lit) != 0) return false;
        pos_ += len;
        return true;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    int number() {
        require(std::isdigit(static_cast<unsigned char>(peek())), "expected a number");
        int value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (s_[pos_++] - '0');
            require(value <= kMaxVertices, "number out of range");
        }
        return value;
    }

    SmallGraph parse_graph_expr() {
        if (eat("co-")) return complement(parse_graph_expr());
        SmallGraph g = parse_term();
        while (eat("+")) g = disjoint_union(g, parse_term());
        return g;
    }

    SmallGraph parse_term() {
        int count = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) count = number();
        return copies(parse_atom(), count);
    }

    SmallGraph parse_atom() {
        if (eat("paw")) {
            SmallGraph g = make_cycle(3);
            g = add_vertex(g, 1u << 2);
            return g;
        }
        const char kind = peek();
        require(kind == 'K' || kind == 'E' || kind == 'P' || kind == 'C',
                "expected K, E, P, C, or paw");
        ++pos_;
        const int a = number();
        if (kind == 'K' && eat(",")) return make_complete_bipartite(a, number());
        if (kind == 'K' && eat("-e")) {
            require(a >= 2, "K-e needs at least two vertices");
            SmallGraph g = make_complete(a);
            g.remove_edge(0, 1);
            return g;
        }
        switch (kind) {
            case 'K': return make_complete(a);
            case 'E': return make_empty(a);
            case 'P': return make_path(a);
            default: return make_cycle(a);
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline SmallGraph parse_graph(const std::string& text) {
    if (text.rfind("g6:", 0) == 0) return decode_graph6(text.substr(3));
    std::string name_error;
    try {
        return detail::NameParser(text).parse();
    } catch (const std::invalid_argument& e) {
        name_error = e.what();
    }
    try {
        return decode_graph6(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("cannot read graph \"" + text + "\": not a name (" +
                                    name_error + ") and not graph6 (" + e.what() + ")");
    }
}

}  // namespace hexact
