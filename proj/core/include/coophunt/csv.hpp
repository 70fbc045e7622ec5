#ifndef COOPHUNT_CSV_HPP
#define COOPHUNT_CSV_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace coophunt {

/// Round-trip-exact decimal form, '.' separator, no grouping.
std::string format_double(double x);

/// Write-temp-then-rename so a crashed run never leaves a partial file.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace coophunt

#endif
