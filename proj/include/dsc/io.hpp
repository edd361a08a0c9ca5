#ifndef DSC_IO_HPP
#define DSC_IO_HPP

#include <fstream>
#include <string>

namespace dsc {

/// Canonical number formatting for reports and CSV: C locale, '.' decimal
/// point, shortest-ish %.12g form. Reruns of the same build produce
/// byte-identical files.
std::string format_double(double v);

/// Opens for writing with LF line endings regardless of platform.
std::ofstream open_output(const std::string& path);

/// Unsigned environment override with a fallback for unset/garbage values.
std::size_t env_size_t(const char* name, std::size_t fallback);

}  // namespace dsc

#endif
