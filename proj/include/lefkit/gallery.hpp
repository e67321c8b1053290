#pragma once

#include <string>
#include <vector>

#include "lefkit/report.hpp"

namespace lefkit {

/// One assertion of a gallery bundle.
struct GalleryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GalleryResult {
  std::string name;
  std::vector<GalleryCheck> checks;
  Json data;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> gallery_names();

/// Builds the named worked instance with its documented parameters and runs
/// the full verification bundle.  Throws UnknownGalleryName.
GalleryResult run_gallery(const std::string& name, const SearchParams& params = {});

}  // namespace lefkit
