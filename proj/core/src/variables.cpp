#include "quiverk/variables.hpp"

namespace quiverk {

std::string Variable::str() const {
  switch (kind_) {
    case VarKind::GrothRoot:
      return "e" + std::to_string(i_) + "_" + std::to_string(j_);
    case VarKind::Residue:
      return "z" + std::to_string(i_) + "_" + std::to_string(j_);
    case VarKind::Aux:
      break;
  }
  switch (family()) {
    case AuxFamily::Xi:
      return "xi";
    case AuxFamily::LocalT:
      return "t";
    case AuxFamily::Weight:
      return "u" + std::to_string(i_) + "_" + std::to_string(j_);
    case AuxFamily::Shifted:
      return "v" + std::to_string(i_) + "_" + std::to_string(j_);
    case AuxFamily::Chern:
      return "c" + std::to_string(i_) + "_" + std::to_string(j_);
    case AuxFamily::Letter: {
      std::string s(1, static_cast<char>(i_));
      if (j_ >= 0) s += std::to_string(j_);
      return s;
    }
    case AuxFamily::Quot:
      return "q" + std::to_string(i_) + "_" + std::to_string(j_);
  }
  return "?";
}

}  // namespace quiverk
