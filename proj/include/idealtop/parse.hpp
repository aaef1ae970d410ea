#pragma once

#include "idealtop/finspace.hpp"
#include "idealtop/seq.hpp"

namespace idealtop {

// Text forms used by the CLI; all throw ParseError with a position.
//
//   set expressions  finite{1,2,3}  arith(0,2)  block(3)  tail(10)  naturals
//                    squares  union(e,e,...)  inter(e,e,...)  diff(e,e)
//                    compl(e)
//   ideals           fin  i1  i2  i3  id  local-blocks  restrict(ideal, set)
//   sequences        closed(1/n)  fibers{0: arith(1,2); 1: arith(0,2)}
//                    blockform(2^(k+1)-(r-1); init 2,1)
//                    fiber values: reals, plane points (x,y), alpha
//   spaces           space{points: a,b; opens: {}, {a}, {a,b}}
SetPtr parse_setexpr(std::string_view src);
Value parse_value(std::string_view src); // real, (x,y) or alpha
IdealPtr parse_ideal(std::string_view src);
Seq parse_seq(std::string_view src);
FinSpace parse_space(std::string_view src);

} // namespace idealtop
