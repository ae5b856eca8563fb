#pragma once

#include <map>

#include "vk/gauss.hpp"

namespace vk {

enum class Parity { Even, Odd };

const char* to_string(Parity p);

// Labels are 1-based, as printed by serialize.
bool linked(const GaussDiagram& d, int label_a, int label_b);
Parity gaussian_parity(const GaussDiagram& d, int label);
std::map<int, Parity> parity_map(const GaussDiagram& d);
int odd_writhe(const GaussDiagram& d);

}  // namespace vk
