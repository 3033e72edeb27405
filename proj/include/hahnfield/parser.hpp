#pragma once

// Text front end. Every failure is a hahn::SyntaxError carrying a byte offset.
//
// Series expressions:
//   expr   := term (("+" | "-") term)*
//   term   := ("+" | "-")? factor ("*" factor)*
//   factor := atom ("^" INT)?
//   atom   := INT ("/" INT)? | "r2" | "t" ("^" "{" exponent "}")? | ident | "(" expr ")"
//   exponent := value | pair ("," pair)*        a bare value sits at chain point 0
//   pair   := "(" point "," value ")"
//   value  := ["+"|"-"] rat [("+"|"-") rat "*" "r2"] | ["+"|"-"] rat "*" "r2" | ["+"|"-"] "r2"
//
// Group specs:
//   spec     := "field" ("Rat" | "Root2") ";" "group" group
//   group    := "HahnSum" "(" chain ";" comp ("," INT ":" comp)* ")"
//   chain    := "Finite" "(" INT ")" | "Integers" | "Rationals"
//   comp     := "Int" | "Rat" | "RatRoot2"

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "hahnfield/group.hpp"
#include "hahnfield/scalar.hpp"
#include "hahnfield/series.hpp"

namespace hahn {

using Bindings = std::map<std::string, Series>;

/// Largest accepted integer power `^INT` in a series expression.
inline constexpr unsigned long kMaxSeriesPower = 256;

Scalar parse_scalar(std::string_view src);
FieldClass parse_field(std::string_view src);
ArchClass parse_arch_class(std::string_view src);
GroupRef parse_presentation(std::string_view src);
std::pair<FieldClass, GroupRef> parse_group_spec(std::string_view src);

/// Either "{(p, v), ...}" or the exponent form used inside t^{...}.
GroupElement parse_group_element(std::string_view src, const GroupRef& group);

Series parse_series(std::string_view src, const Carrier& carrier, const Bindings& bindings = {});

}  // namespace hahn
