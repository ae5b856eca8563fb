#include "vk/parity.hpp"

namespace vk {

const char* to_string(Parity p) { return p == Parity::Even ? "Even" : "Odd"; }

bool linked(const GaussDiagram& d, int label_a, int label_b) {
  int a = d.arrow_of_label(label_a);
  int b = d.arrow_of_label(label_b);
  if (a == b) throw Error(ErrorKind::NoSuchLabel, "an arrow is not linked with itself");
  return interlaced(d, a, b);
}

Parity gaussian_parity(const GaussDiagram& d, int label) {
  return interlacement_degree(d, d.arrow_of_label(label)) % 2 ? Parity::Odd : Parity::Even;
}

std::map<int, Parity> parity_map(const GaussDiagram& d) {
  std::map<int, Parity> out;
  for (int label = 1; label <= d.size(); ++label) out[label] = gaussian_parity(d, label);
  return out;
}

int odd_writhe(const GaussDiagram& d) {
  int theta = 0;
  for (int a = 0; a < d.size(); ++a) {
    if (interlacement_degree(d, a) % 2) theta += sign_value(d.sign(a));
  }
  return theta;
}

}  // namespace vk
