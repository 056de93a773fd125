#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace cgw {

// Abstract syntax of the group-expression DSL.
//
//   free(r) | cyclic(n) | abelian(r) | heisenberg | table(NAME)
//   product(G, H)                      free product
//   direct(G, H)                       direct product
//   hnn(G, a='word', b='word')         t^-1 a t = b, cyclic edge groups
class GroupExpr {
 public:
  enum class Kind {
    free,
    cyclic,
    abelian,
    heisenberg,
    table,
    free_product,
    direct_product,
    hnn,
  };

  static GroupExpr free(std::int64_t rank);
  static GroupExpr cyclic(std::int64_t order);
  static GroupExpr abelian(std::int64_t rank);
  static GroupExpr heisenberg();
  static GroupExpr table(std::string name);
  static GroupExpr free_product(GroupExpr left, GroupExpr right);
  static GroupExpr direct_product(GroupExpr left, GroupExpr right);
  static GroupExpr hnn(GroupExpr base, std::string a_word, std::string b_word);

  Kind kind() const noexcept { return kind_; }
  bool is_composite() const noexcept {
    return kind_ == Kind::free_product || kind_ == Kind::direct_product ||
           kind_ == Kind::hnn;
  }

  // Rank for free/abelian, order for cyclic.
  std::int64_t parameter() const noexcept { return parameter_; }
  const std::string& table_name() const noexcept { return text_a_; }

  // Children: left/right for products, base() for hnn (== left()).
  const GroupExpr& left() const { return *left_; }
  const GroupExpr& right() const { return *right_; }
  const GroupExpr& base() const { return *left_; }
  const std::string& edge_a() const noexcept { return text_a_; }
  const std::string& edge_b() const noexcept { return text_b_; }

  // Number of composite constructors on the longest root-to-leaf path.
  std::size_t composite_depth() const;
  // Number of hnn constructors on the longest root-to-leaf path.
  std::size_t hnn_depth() const;

  std::string to_string() const;

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);

 private:
  GroupExpr() = default;

  Kind kind_ = Kind::free;
  std::int64_t parameter_ = 0;
  std::string text_a_;
  std::string text_b_;
  std::shared_ptr<const GroupExpr> left_;
  std::shared_ptr<const GroupExpr> right_;
};

// Throws SyntaxError (with offset, line and column) on malformed text and
// InputError on unknown constructors or bad arity.
GroupExpr parse_group_expr(std::string_view text);

}  // namespace cgw
