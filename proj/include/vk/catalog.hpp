#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vk {

enum class EntryKind { Gauss, Free, Surface };
enum class Provenance { PaperTranscribed, Constructed, SearchFound };

const char* to_string(EntryKind k);
const char* to_string(Provenance p);

struct CatalogEntry {
  std::string name;
  EntryKind kind;
  std::string payload;  // Gauss code, free code or surface file text
  Provenance provenance;
  std::string notes;
};

std::vector<std::string> catalog_names();
// Throws NoSuchEntry; gated names carry a note saying why.
const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace vk
