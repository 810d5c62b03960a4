#include "braidwo/bignat.hpp"

namespace braidwo {

std::string sci_digest(const BigNat& x) {
  std::string digits = x.get_str();
  if (digits.size() <= 12) return digits;
  std::string head = digits.substr(0, 5);
  std::string r = head.substr(0, 1) + "." + head.substr(1) + "e+" +
                  std::to_string(digits.size() - 1);
  r += " (" + std::to_string(bit_length(x)) + " bits)";
  return r;
}

std::string show(const BigNat& x, std::size_t cut) {
  std::string digits = x.get_str();
  if (digits.size() <= cut) return digits;
  return sci_digest(x);
}

}  // namespace braidwo
