#pragma once

#include <string_view>

#include "yablo/error.hpp"
#include "yablo/formula.hpp"

namespace yablo {

// Grammar (whitespace insignificant between tokens):
//   formula := iff
//   iff     := imp { "<->" imp }                      (left-associative)
//   imp     := or [ "->" imp ]                        (right-associative)
//   or      := and { "|" and }
//   and     := unary { "&" unary }
//   unary   := "~" unary | "(" formula ")" | atom | quant
//   quant   := ("forall" | "exists") var "." formula  (body extends right)
//   atom    := "R" "(" term "," term ")" | term "=" term
//   term    := var | "s" "(" term ")"
//   var     := lowercase letter, then letters/digits/underscore; not a keyword
FormulaPtr parse_formula(std::string_view text);

}  // namespace yablo
