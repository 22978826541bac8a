#pragma once

#include <filesystem>
#include <string_view>

namespace emmc {

/// Writes `content` to a temporary sibling file and renames it over `path`, so readers
/// never observe a truncated file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace emmc
