#pragma once

#include "ludics/design.hpp"
#include "ludics/error.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ludics {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, SourceSpan at);
    SourceSpan where() const { return at_; }

private:
    SourceSpan at_;
};

struct ActionNode {
    Action action;
    SourceSpan span;
    std::vector<ActionNode> children;
};

/// One `design (base) { forest }` block as written, before validation.
struct DesignDocument {
    Sequent base;
    SourceSpan span;
    std::vector<ActionNode> forest;
};

std::vector<DesignDocument> parse_documents(std::string_view text);
Design to_design(const DesignDocument& doc);

/// Every design of the text, each validated on its own.
std::vector<Design> parse_designs(std::string_view text);
/// The designs of the text validated together as a net.
Net parse_net(std::string_view text);
/// A whitespace separated list of actions, as in `(+ xi {1,2}) (- xi.1 {}) daimon`.
Sequence parse_actions(std::string_view text);

enum class Format { Text, Structured };

constexpr int format_version = 1;

std::string serialize(const Design& d, Format format = Format::Text);
std::string serialize(const Net& n, Format format = Format::Text);

nlohmann::json to_json(const Action& a);
nlohmann::json to_json(const Sequence& s);
nlohmann::json to_json(const Design& d);
nlohmann::json to_json(const Net& n);

} // namespace ludics
