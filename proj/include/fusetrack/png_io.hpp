#pragma once

#include <string>

#include "fusetrack/image.hpp"

namespace fusetrack {

// Minimal PNG writer (8-bit gray or RGB, zlib-compressed). Throws IoError on
// filesystem failure.
void write_png(const std::string& path, const Image& img);

}  // namespace fusetrack
