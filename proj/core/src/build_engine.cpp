#include "cgw/engine.hpp"
#include "cgw/engines.hpp"
#include "cgw/error.hpp"
#include "cgw/hnn.hpp"

namespace cgw {

namespace {

constexpr std::size_t kMaxCompositeDepth = 8;
constexpr std::size_t kMaxHnnDepth = 2;

EnginePtr build(const GroupExpr& expr) {
  using K = GroupExpr::Kind;
  switch (expr.kind()) {
    case K::free:
      return std::make_shared<FreeEngine>(expr, expr.parameter());
    case K::cyclic:
      return std::make_shared<CyclicEngine>(expr, expr.parameter());
    case K::abelian:
      return std::make_shared<AbelianEngine>(expr, expr.parameter());
    case K::heisenberg:
      return std::make_shared<HeisenbergEngine>(expr);
    case K::table:
      return make_table_engine(expr);
    case K::free_product:
      return std::make_shared<FreeProductEngine>(expr, build(expr.left()),
                                                 build(expr.right()));
    case K::direct_product:
      return std::make_shared<DirectProductEngine>(expr, build(expr.left()),
                                                   build(expr.right()));
    case K::hnn: {
      EnginePtr base = build(expr.base());
      Payload a = base->evaluate(parse_word(expr.edge_a(), base->generators()));
      Payload b = base->evaluate(parse_word(expr.edge_b(), base->generators()));
      return std::make_shared<HnnEngine>(expr, std::move(base), std::move(a),
                                         std::move(b));
    }
  }
  throw UnsupportedComposition("unknown group constructor");
}

}  // namespace

EnginePtr build_engine(const GroupExpr& expr) {
  if (expr.composite_depth() > kMaxCompositeDepth) {
    throw UnsupportedComposition(
        "composite nesting depth " + std::to_string(expr.composite_depth()) +
        " exceeds the limit of " + std::to_string(kMaxCompositeDepth));
  }
  if (expr.hnn_depth() > kMaxHnnDepth) {
    throw UnsupportedComposition(
        "hnn nesting depth " + std::to_string(expr.hnn_depth()) +
        " exceeds the limit of " + std::to_string(kMaxHnnDepth) +
        " (hnn over hnn is supported only one level deep)");
  }
  return build(expr);
}

EnginePtr build_engine(std::string_view dsl) {
  return build_engine(parse_group_expr(dsl));
}

}  // namespace cgw
