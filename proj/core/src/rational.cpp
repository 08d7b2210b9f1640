#include "dw/rational.hpp"

#include "dw/error.hpp"

#include <cctype>

namespace dw {

std::string ValidationError::compose(const std::string& invariant, const std::string& message,
                                     const std::string& field) {
    std::string out = invariant + ": " + message;
    if (!field.empty()) out += " (at " + field + ")";
    return out;
}

ValidationError ValidationError::at(const std::string& prefix) const {
    std::string path = field_.empty() ? prefix : prefix + (field_.front() == '[' ? "" : ".") + field_;
    std::string what_msg = what();
    // strip the old location suffix, if any, before recomposing
    auto pos = what_msg.rfind(" (at ");
    if (pos != std::string::npos) what_msg.erase(pos);
    auto colon = what_msg.find(": ");
    std::string message = colon == std::string::npos ? what_msg : what_msg.substr(colon + 2);
    return ValidationError(invariant_, message, path);
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ValidationError("rational_format", "expected \"p\" or \"p/q\", got \"" + std::string(text) + "\"");
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ValidationError("rational_format", "zero denominator in \"" + std::string(text) + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace dw
