// Builds the complete system of primitive idempotents of H_3, checks the
// defining properties, and prints quantum dimensions two ways.

#include "hecke/idempotents.hpp"
#include "hecke/trace.hpp"

#include <iostream>

using namespace hecke;

int main() {
  SymbolicCtx ctx;
  const int n = 3;

  auto recs = resolution(ctx, n);
  std::cout << "rank " << n << ": " << recs.size() << " idempotents\n\n";
  for (const auto& rec : recs) {
    std::cout << "content string (";
    for (size_t i = 0; i < rec.eigenvalues.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << rec.eigenvalues[i];
    }
    std::cout << ")  shape " << rec.tableau.shape().str() << "\n"
              << "  " << rec.element.str() << "\n";
  }

  auto sum = HeckeElement<RatFunc>(n);
  for (const auto& rec : recs) sum += rec.element;
  std::cout << "\nsum of all idempotents: " << sum.str() << "\n";

  bool orthogonal = true;
  for (size_t a = 0; a < recs.size(); ++a)
    for (size_t b = 0; b < recs.size(); ++b) {
      auto prod = idempotent_product(ctx, recs[a], recs[b]);
      if (a == b ? !(prod == recs[a].element) : !prod.is_zero())
        orthogonal = false;
    }
  std::cout << "pairwise orthogonal: " << (orthogonal ? "yes" : "NO") << "\n\n";

  const int d = 2;
  TraceContext<SymbolicCtx> tr(ctx, d);
  std::cout << "quantum dimensions at d = " << d << ":\n";
  for (int size = 1; size <= 4; ++size) {
    for (const YoungDiagram& shape : partitions(size)) {
      RatFunc closed = qdim_closed(d, shape);
      std::cout << "  " << shape.str() << "  " << field_str(closed);
      if (size <= n) {
        RatFunc via = qdim_via_trace(tr, shape);
        std::cout << (via == closed ? "  (matches the trace)"
                                    : "  (TRACE MISMATCH)");
      }
      std::cout << "\n";
    }
  }
  return 0;
}
