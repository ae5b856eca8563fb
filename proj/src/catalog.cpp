#include "vk/catalog.hpp"

#include <algorithm>

#include "vk/error.hpp"

namespace vk {

namespace {

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = {
      {"unknot", EntryKind::Gauss, "", Provenance::Constructed, "empty diagram"},
      {"kink", EntryKind::Gauss, "O1+,U1+", Provenance::Constructed, "one positive curl"},
      {"trefoil", EntryKind::Gauss, "O1-,U2-,O3-,U1-,O2-,U3-", Provenance::Constructed, "closure of the braid s1^3"},
      {"figure-eight", EntryKind::Gauss, "O1+,U2-,O3-,U1+,O4+,U3-,O2-,U4+", Provenance::Constructed,
       "closure of the braid s1 s2^-1 s1 s2^-1"},
      {"virtual-trefoil", EntryKind::Gauss, "O1+,O2+,U1+,U2+", Provenance::Constructed,
       "not realizable, odd writhe 2"},
      {"irreducibly-odd", EntryKind::Free, "X1,X2,X1,X3,X4,X2,X5,X3,X5,X6,X4,X6", Provenance::SearchFound,
       "least irreducibly odd free knot; none has fewer than 6 chords"},
      {"sawollek-not-invertible", EntryKind::Gauss, "O1+,O2+,O3+,U1+,U3+,U2+", Provenance::SearchFound,
       "least 3-arrow code whose normalized Sawollek polynomial differs from that of its inverse; none with fewer arrows"},
      {"virtual-trefoil-genus-2", EntryKind::Surface,
       "genus 2\n"
       "attach a1,a2,a1',a2',a3,a4,a3',a4'\n"
       "bandcross 1 2 0 0 -\n"
       "bandcross 3 4 0 0 -\n"
       "knot O1+,O2+,B1-0,U1+,B2-1,U2+,B2-2,B1-1,B2+0\n",
       Provenance::Constructed, "virtual trefoil on its genus 1 surface plus an empty handle"},
  };
  return all;
}

const std::vector<std::pair<std::string, std::string>>& gated() {
  static const std::vector<std::pair<std::string, std::string>> all = {
      {"khat1", "odd writhe 2 cover; its Gauss code has not been transcribed"},
      {"khat2", "odd writhe -2 cover; its Gauss code has not been transcribed"},
      {"khat3", "irreducibly odd cover; its Gauss code has not been transcribed"},
      {"khat4", "cover not invertible by Sawollek; its Gauss code has not been transcribed"},
      {"kishino", "surface diagram on S_2 has not been transcribed"},
  };
  return all;
}

}  // namespace

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Gauss: return "gauss";
    case EntryKind::Free: return "free";
    case EntryKind::Surface: return "surface";
  }
  return "?";
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::PaperTranscribed: return "paper-transcribed";
    case Provenance::Constructed: return "constructed";
    case Provenance::SearchFound: return "search-found";
  }
  return "?";
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : entries()) out.push_back(e.name);
  return out;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : entries()) {
    if (e.name == name) return e;
  }
  for (const auto& [gname, note] : gated()) {
    if (gname == name) throw Error(ErrorKind::NoSuchEntry, gname + ": " + note);
  }
  throw Error(ErrorKind::NoSuchEntry, std::string(name));
}

}  // namespace vk
