#include "cgw/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <variant>
#include <vector>

#include "cgw/error.hpp"

namespace cgw {

GroupExpr GroupExpr::free(std::int64_t rank) {
  if (rank < 0 || rank > 1024) {
    throw InputError("free(): rank must lie in [0, 1024]");
  }
  GroupExpr e;
  e.kind_ = Kind::free;
  e.parameter_ = rank;
  return e;
}

GroupExpr GroupExpr::cyclic(std::int64_t order) {
  if (order < 1 || order > (std::int64_t{1} << 30)) {
    throw InputError("cyclic(): order must lie in [1, 2^30]");
  }
  GroupExpr e;
  e.kind_ = Kind::cyclic;
  e.parameter_ = order;
  return e;
}

GroupExpr GroupExpr::abelian(std::int64_t rank) {
  if (rank < 0 || rank > 1024) {
    throw InputError("abelian(): rank must lie in [0, 1024]");
  }
  GroupExpr e;
  e.kind_ = Kind::abelian;
  e.parameter_ = rank;
  return e;
}

GroupExpr GroupExpr::heisenberg() {
  GroupExpr e;
  e.kind_ = Kind::heisenberg;
  return e;
}

GroupExpr GroupExpr::table(std::string name) {
  if (name.empty()) {
    throw InputError("table(): empty table name");
  }
  GroupExpr e;
  e.kind_ = Kind::table;
  e.text_a_ = std::move(name);
  return e;
}

GroupExpr GroupExpr::free_product(GroupExpr left, GroupExpr right) {
  GroupExpr e;
  e.kind_ = Kind::free_product;
  e.left_ = std::make_shared<const GroupExpr>(std::move(left));
  e.right_ = std::make_shared<const GroupExpr>(std::move(right));
  return e;
}

GroupExpr GroupExpr::direct_product(GroupExpr left, GroupExpr right) {
  GroupExpr e;
  e.kind_ = Kind::direct_product;
  e.left_ = std::make_shared<const GroupExpr>(std::move(left));
  e.right_ = std::make_shared<const GroupExpr>(std::move(right));
  return e;
}

GroupExpr GroupExpr::hnn(GroupExpr base, std::string a_word,
                         std::string b_word) {
  GroupExpr e;
  e.kind_ = Kind::hnn;
  e.left_ = std::make_shared<const GroupExpr>(std::move(base));
  e.text_a_ = std::move(a_word);
  e.text_b_ = std::move(b_word);
  return e;
}

std::size_t GroupExpr::composite_depth() const {
  switch (kind_) {
    case Kind::free_product:
    case Kind::direct_product:
      return 1 + std::max(left_->composite_depth(), right_->composite_depth());
    case Kind::hnn:
      return 1 + left_->composite_depth();
    default:
      return 0;
  }
}

std::size_t GroupExpr::hnn_depth() const {
  switch (kind_) {
    case Kind::free_product:
    case Kind::direct_product:
      return std::max(left_->hnn_depth(), right_->hnn_depth());
    case Kind::hnn:
      return 1 + left_->hnn_depth();
    default:
      return 0;
  }
}

std::string GroupExpr::to_string() const {
  switch (kind_) {
    case Kind::free:
      return "free(" + std::to_string(parameter_) + ")";
    case Kind::cyclic:
      return "cyclic(" + std::to_string(parameter_) + ")";
    case Kind::abelian:
      return "abelian(" + std::to_string(parameter_) + ")";
    case Kind::heisenberg:
      return "heisenberg";
    case Kind::table:
      return "table(" + text_a_ + ")";
    case Kind::free_product:
      return "product(" + left_->to_string() + ", " + right_->to_string() +
             ")";
    case Kind::direct_product:
      return "direct(" + left_->to_string() + ", " + right_->to_string() + ")";
    case Kind::hnn:
      return "hnn(" + left_->to_string() + ", a='" + text_a_ + "', b='" +
             text_b_ + "')";
  }
  return {};
}

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.kind_ != b.kind_ || a.parameter_ != b.parameter_ ||
      a.text_a_ != b.text_a_ || a.text_b_ != b.text_b_) {
    return false;
  }
  auto same = [](const std::shared_ptr<const GroupExpr>& x,
                 const std::shared_ptr<const GroupExpr>& y) {
    if (!x || !y) {
      return !x && !y;
    }
    return *x == *y;
  };
  return same(a.left_, b.left_) && same(a.right_, b.right_);
}

namespace {

// Untyped parse tree; converted to GroupExpr once arity is known.
struct Node;
struct Arg {
  std::string key;  // empty for positional arguments
  std::variant<std::int64_t, std::string, std::shared_ptr<Node>> value;
  std::size_t offset = 0;
};
struct Node {
  std::string name;
  bool has_parens = false;
  std::vector<Arg> args;
  std::size_t offset = 0;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::shared_ptr<Node> parse() {
    auto node = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return node;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(what, at, line, column);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool name_start() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_');
  }

  std::string name() {
    if (!name_start()) {
      fail("expected a name");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::shared_ptr<Node> expr() {
    skip_space();
    auto node = std::make_shared<Node>();
    node->offset = pos_;
    node->name = name();
    if (peek('(')) {
      ++pos_;
      node->has_parens = true;
      if (peek(')')) {
        ++pos_;
        return node;
      }
      for (;;) {
        node->args.push_back(arg());
        if (peek(',')) {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
    }
    return node;
  }

  Arg arg() {
    skip_space();
    Arg a;
    a.offset = pos_;
    if (pos_ >= text_.size()) {
      fail("expected an argument");
    }
    char c = text_[pos_];
    if (c == '\'' || c == '"') {
      a.value = string_literal();
      return a;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      a.value = integer();
      return a;
    }
    if (!name_start()) {
      fail("expected an argument");
    }
    // Either kv (name '=' ...) or a nested expression.
    std::size_t save = pos_;
    std::string key = name();
    if (peek('=')) {
      ++pos_;
      a.key = std::move(key);
      skip_space();
      if (pos_ >= text_.size()) {
        fail("expected a value after '='");
      }
      char v = text_[pos_];
      if (v == '\'' || v == '"') {
        a.value = string_literal();
      } else if (v == '-' || std::isdigit(static_cast<unsigned char>(v))) {
        a.value = integer();
      } else {
        a.value = expr();
      }
      return a;
    }
    pos_ = save;
    a.value = expr();
    return a;
  }

  std::string string_literal() {
    char quote = text_[pos_];
    std::size_t start = ++pos_;
    while (pos_ < text_.size() && text_[pos_] != quote) {
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      fail_at("unterminated string literal", start - 1);
    }
    std::string out(text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (text_[pos_] == '-') {
      ++pos_;
    }
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      fail_at("malformed integer", start);
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void arity_error(const Node& n, const std::string& what) {
  throw InputError(n.name + "(): " + what + " (at offset " +
                   std::to_string(n.offset) + ")");
}

std::int64_t int_arg(const Node& n) {
  if (n.args.size() != 1 || !n.args[0].key.empty() ||
      !std::holds_alternative<std::int64_t>(n.args[0].value)) {
    arity_error(n, "expects exactly one integer argument");
  }
  return std::get<std::int64_t>(n.args[0].value);
}

GroupExpr convert(const Node& n);

GroupExpr expr_arg(const Node& n, const Arg& a) {
  if (!std::holds_alternative<std::shared_ptr<Node>>(a.value)) {
    arity_error(n, "expects a group expression argument");
  }
  return convert(*std::get<std::shared_ptr<Node>>(a.value));
}

GroupExpr convert(const Node& n) {
  const std::string& c = n.name;
  if (c == "free") {
    return GroupExpr::free(int_arg(n));
  }
  if (c == "cyclic") {
    return GroupExpr::cyclic(int_arg(n));
  }
  if (c == "abelian") {
    return GroupExpr::abelian(int_arg(n));
  }
  if (c == "heisenberg") {
    if (!n.args.empty()) {
      arity_error(n, "takes no arguments");
    }
    return GroupExpr::heisenberg();
  }
  if (c == "table") {
    if (n.args.size() != 1 || !n.args[0].key.empty()) {
      arity_error(n, "expects exactly one table name");
    }
    const auto& v = n.args[0].value;
    if (std::holds_alternative<std::string>(v)) {
      return GroupExpr::table(std::get<std::string>(v));
    }
    if (std::holds_alternative<std::shared_ptr<Node>>(v)) {
      const Node& inner = *std::get<std::shared_ptr<Node>>(v);
      if (!inner.has_parens) {
        return GroupExpr::table(inner.name);
      }
    }
    arity_error(n, "expects a table name");
  }
  if (c == "product" || c == "direct") {
    if (n.args.size() != 2 || !n.args[0].key.empty() ||
        !n.args[1].key.empty()) {
      arity_error(n, "expects exactly two group arguments");
    }
    GroupExpr l = expr_arg(n, n.args[0]);
    GroupExpr r = expr_arg(n, n.args[1]);
    return c == "product" ? GroupExpr::free_product(std::move(l), std::move(r))
                          : GroupExpr::direct_product(std::move(l),
                                                      std::move(r));
  }
  if (c == "hnn") {
    if (n.args.size() != 3 || !n.args[0].key.empty()) {
      arity_error(n, "expects hnn(base, a='word', b='word')");
    }
    std::optional<std::string> a;
    std::optional<std::string> b;
    for (std::size_t i = 1; i < 3; ++i) {
      const Arg& arg = n.args[i];
      if (!std::holds_alternative<std::string>(arg.value)) {
        arity_error(n, "edge words must be quoted strings");
      }
      if (arg.key == "a" && !a) {
        a = std::get<std::string>(arg.value);
      } else if (arg.key == "b" && !b) {
        b = std::get<std::string>(arg.value);
      } else {
        arity_error(n, "expects keyword arguments a= and b=");
      }
    }
    return GroupExpr::hnn(expr_arg(n, n.args[0]), *a, *b);
  }
  throw InputError("unknown constructor '" + c + "' at offset " +
                   std::to_string(n.offset));
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) {
  ExprParser parser(text);
  auto tree = parser.parse();
  return convert(*tree);
}

}  // namespace cgw
