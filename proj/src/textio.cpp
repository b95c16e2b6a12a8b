#include "ludics/textio.hpp"

#include <charconv>
#include <functional>

namespace ludics {

SyntaxError::SyntaxError(const std::string& message, SourceSpan at)
    : Error(ErrorCode::Syntax,
            "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + message),
      at_(at)
{
}

namespace {

enum class Tok { LParen, RParen, LBrace, RBrace, Comma, Turnstile, Plus, Minus, Dot, Ident, Nat, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

const char* describe(Tok t)
{
    switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Turnstile: return "'|-'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Dot: return "'.'";
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view in)
{
    std::vector<Token> out;
    SourceSpan pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (in[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (i < in.size()) {
        char c = in[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < in.size() && in[i] != '\n')
                advance(1);
            continue;
        }
        SourceSpan at = pos;
        auto single = [&](Tok t) {
            out.push_back({t, std::string(1, c), at});
            advance(1);
        };
        switch (c) {
        case '(': single(Tok::LParen); continue;
        case ')': single(Tok::RParen); continue;
        case '{': single(Tok::LBrace); continue;
        case '}': single(Tok::RBrace); continue;
        case ',': single(Tok::Comma); continue;
        case '+': single(Tok::Plus); continue;
        case '-': single(Tok::Minus); continue;
        case '.': single(Tok::Dot); continue;
        default: break;
        }
        if (c == '|' && i + 1 < in.size() && in[i + 1] == '-') {
            out.push_back({Tok::Turnstile, "|-", at});
            advance(2);
        } else if (is_alpha(c)) {
            std::size_t j = i;
            while (j < in.size() && (is_alpha(in[j]) || is_digit(in[j])))
                ++j;
            out.push_back({Tok::Ident, std::string(in.substr(i, j - i)), at});
            advance(j - i);
        } else if (is_digit(c)) {
            std::size_t j = i;
            while (j < in.size() && is_digit(in[j]))
                ++j;
            out.push_back({Tok::Nat, std::string(in.substr(i, j - i)), at});
            advance(j - i);
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", at);
        }
    }
    out.push_back({Tok::End, "", pos});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    std::vector<DesignDocument> documents()
    {
        std::vector<DesignDocument> out;
        while (peek().kind != Tok::End)
            out.push_back(document());
        if (out.empty())
            throw SyntaxError("expected at least one design", peek().span);
        return out;
    }

    Sequence actions()
    {
        Sequence out;
        while (peek().kind != Tok::End)
            out.push_back(action().action);
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    const Token& expect(Tok t)
    {
        if (peek().kind != t)
            throw SyntaxError(std::string("expected ") + describe(t) + ", found " + describe(peek().kind), peek().span);
        return toks_[pos_++];
    }

    bool keyword(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

    DesignDocument document()
    {
        DesignDocument doc;
        doc.span = peek().span;
        if (!keyword("design"))
            throw SyntaxError("expected 'design'", peek().span);
        ++pos_;
        expect(Tok::LParen);
        std::optional<Locus> left;
        std::vector<Locus> right;
        if (peek().kind == Tok::Ident)
            left = locus();
        expect(Tok::Turnstile);
        if (peek().kind == Tok::Ident) {
            right.push_back(locus());
            while (peek().kind == Tok::Comma) {
                ++pos_;
                right.push_back(locus());
            }
        }
        expect(Tok::RParen);
        doc.base = Sequent(std::move(left), std::move(right));
        expect(Tok::LBrace);
        doc.forest = forest();
        expect(Tok::RBrace);
        return doc;
    }

    std::vector<ActionNode> forest()
    {
        std::vector<ActionNode> out;
        while (peek().kind == Tok::LParen || keyword("daimon")) {
            ActionNode node = action();
            if (peek().kind == Tok::LBrace) {
                ++pos_;
                node.children = forest();
                expect(Tok::RBrace);
            }
            out.push_back(std::move(node));
        }
        return out;
    }

    ActionNode action()
    {
        SourceSpan at = peek().span;
        if (keyword("daimon")) {
            ++pos_;
            return {Action::daimon(), at, {}};
        }
        expect(Tok::LParen);
        Polarity pol;
        if (peek().kind == Tok::Plus)
            pol = Polarity::Positive;
        else if (peek().kind == Tok::Minus)
            pol = Polarity::Negative;
        else
            throw SyntaxError("expected '+' or '-'", peek().span);
        ++pos_;
        Locus focus = locus();
        expect(Tok::LBrace);
        std::vector<std::uint32_t> ram;
        if (peek().kind == Tok::Nat) {
            ram.push_back(nat());
            while (peek().kind == Tok::Comma) {
                ++pos_;
                ram.push_back(nat());
            }
        }
        expect(Tok::RBrace);
        expect(Tok::RParen);
        return {Action(pol, std::move(focus), std::move(ram)), at, {}};
    }

    Locus locus()
    {
        const Token& root = expect(Tok::Ident);
        if (root.text == "design" || root.text == "daimon")
            throw SyntaxError("'" + root.text + "' is reserved", root.span);
        std::vector<std::uint32_t> suffix;
        while (peek().kind == Tok::Dot) {
            ++pos_;
            suffix.push_back(nat());
        }
        return Locus(root.text, std::move(suffix));
    }

    std::uint32_t nat()
    {
        const Token& t = expect(Tok::Nat);
        std::uint32_t n = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc())
            throw SyntaxError("number out of range", t.span);
        return n;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void collect(const std::vector<ActionNode>& forest, Sequence& prefix, ChronicleSet& out)
{
    for (auto& node : forest) {
        prefix.push_back(node.action);
        out.insert(prefix);
        collect(node.children, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<DesignDocument> parse_documents(std::string_view text)
{
    return Parser(text).documents();
}

Design to_design(const DesignDocument& doc)
{
    ChronicleSet chronicles;
    Sequence prefix;
    collect(doc.forest, prefix, chronicles);
    try {
        return validate_design(doc.base, std::move(chronicles));
    } catch (const Error& e) {
        throw Error(e.code(), "design at line " + std::to_string(doc.span.line) + ": " + e.detail(), e.index());
    }
}

std::vector<Design> parse_designs(std::string_view text)
{
    std::vector<Design> out;
    for (auto& doc : parse_documents(text))
        out.push_back(to_design(doc));
    return out;
}

Net parse_net(std::string_view text)
{
    return validate_net(parse_designs(text));
}

Sequence parse_actions(std::string_view text)
{
    return Parser(text).actions();
}

namespace {

void write_forest(const Design& d, const Sequence& prefix, int depth, std::string& out)
{
    for (auto& a : d.next_actions(prefix)) {
        Sequence next = prefix;
        next.push_back(a);
        out += std::string(2 * depth, ' ') + a.to_string();
        if (d.next_actions(next).empty()) {
            out += "\n";
            continue;
        }
        out += " {\n";
        write_forest(d, next, depth + 1, out);
        out += std::string(2 * depth, ' ') + "}\n";
    }
}

nlohmann::json forest_json(const Design& d, const Sequence& prefix)
{
    auto arr = nlohmann::json::array();
    for (auto& a : d.next_actions(prefix)) {
        Sequence next = prefix;
        next.push_back(a);
        arr.push_back({{"action", to_json(a)}, {"children", forest_json(d, next)}});
    }
    return arr;
}

} // namespace

nlohmann::json to_json(const Action& a)
{
    if (a.is_daimon())
        return {{"kind", "daimon"}};
    return {{"kind", "proper"},
            {"polarity", a.is_positive() ? "+" : "-"},
            {"focus", a.focus().to_string()},
            {"ramification", a.ramification()}};
}

nlohmann::json to_json(const Sequence& s)
{
    auto arr = nlohmann::json::array();
    for (auto& a : s)
        arr.push_back(to_json(a));
    return arr;
}

nlohmann::json to_json(const Design& d)
{
    nlohmann::json base;
    base["left"] = d.base().left() ? nlohmann::json(d.base().left()->to_string()) : nlohmann::json(nullptr);
    base["right"] = nlohmann::json::array();
    for (auto& l : d.base().right())
        base["right"].push_back(l.to_string());
    return {{"base", base}, {"forest", forest_json(d, {})}};
}

nlohmann::json to_json(const Net& n)
{
    auto arr = nlohmann::json::array();
    for (auto& d : n.designs())
        arr.push_back(to_json(d));
    return {{"designs", arr}};
}

std::string serialize(const Design& d, Format format)
{
    if (format == Format::Structured) {
        nlohmann::json j = {{"format_version", format_version}, {"designs", nlohmann::json::array({to_json(d)})}};
        return j.dump(2) + "\n";
    }
    std::string out = "design (" + d.base().to_string() + ") {";
    if (d.empty())
        return out + " }\n";
    out += "\n";
    write_forest(d, {}, 1, out);
    return out + "}\n";
}

std::string serialize(const Net& n, Format format)
{
    if (format == Format::Structured) {
        nlohmann::json j = to_json(n);
        j["format_version"] = format_version;
        return j.dump(2) + "\n";
    }
    std::string out;
    for (auto& d : n.designs())
        out += serialize(d, Format::Text);
    return out;
}

} // namespace ludics
