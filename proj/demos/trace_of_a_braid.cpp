// Parses a word in the generators and takes its Ocneanu trace, first
// symbolically and then at a rational sample point.

#include "hecke/expr.hpp"
#include "hecke/trace.hpp"

#include <iostream>

using namespace hecke;

int main(int argc, char** argv) {
  const std::string src = argc > 1 ? argv[1] : "s1*s2^-1*s1*s2^-1*s1*s2^-1";
  const int n = 3, d = 1;

  ExprPtr ast;
  try {
    ast = parse_expression(src, n);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "expression: " << render(ast) << "\n";

  SymbolicCtx sym;
  TraceContext<SymbolicCtx> tr(sym, d);
  RatFunc value = ocneanu_trace(tr, evaluate(sym, ast, n));
  std::cout << "trace (symbolic, d=" << d << "): " << field_str(value) << "\n";

  Rational q0 = make_rational(7, 5);
  EvaluatedCtx ev(q0);
  TraceContext<EvaluatedCtx> trev(ev, d);
  Rational at_q = ocneanu_trace(trev, evaluate(ev, ast, n));
  std::cout << "trace at q = " << to_string(q0) << ": " << to_string(at_q)
            << "\n";
  std::cout << "closed form evaluated there: " << to_string(value.eval(q0))
            << "\n";
  return 0;
}
