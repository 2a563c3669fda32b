#pragma once

#include <string>

namespace esbp {

// write to a temporary file next to path, then rename over it
void write_atomic(const std::string& path, const std::string& content);
std::string csv_number(double v);

}
