#include "boalch/symbol.hpp"

namespace boalch {

std::string GenSymbol::str() const {
  switch (kind) {
    case SymKind::Idem:
      return "e" + std::to_string(target);
    case SymKind::V:
      return "v" + std::to_string(target) + std::to_string(source);
    case SymKind::W:
      return "w" + std::to_string(target) + std::to_string(source);
    case SymKind::Gamma:
      return "g" + std::to_string(target);
    case SymKind::GammaInv:
      return "g" + std::to_string(target) + "inv";
  }
  return "?";
}

std::string Word::str() const {
  if (syms.empty()) return "e" + std::to_string(vertex);
  std::string out;
  for (size_t i = 0; i < syms.size(); ++i) {
    if (i) out += "*";
    out += syms[i].str();
  }
  return out;
}

bool compose(const Word& a, const Word& b, Word& out) {
  if (a.source() != b.target()) return false;
  if (a.is_idem()) {
    out = b;
    return true;
  }
  if (b.is_idem()) {
    out = a;
    return true;
  }
  out.vertex = 0;
  out.syms = a.syms;
  out.syms.insert(out.syms.end(), b.syms.begin(), b.syms.end());
  return true;
}

}  // namespace boalch
