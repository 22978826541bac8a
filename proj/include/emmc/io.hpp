#pragma once

#include "emmc/atomic_write.hpp"
#include "emmc/types.hpp"

#include <filesystem>
#include <string>

namespace emmc {

/// Design files: "emmc-design 1", the variable count, then one scaled variable per line
/// printed with 17 significant digits so the file round-trips exactly.
std::string design_file_text(const VecX& z);
void write_design_file(const std::filesystem::path& path, const VecX& z);
VecX read_design_file(const std::filesystem::path& path);

/// %.17g, with "nan" for NaN.
std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);

} // namespace emmc
