#pragma once

// Shared test scratch space: a per-process temp directory and a helper for
// writing fixture files into it.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

namespace fixtures {

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("qholo_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::filesystem::path write_file(const std::string& name,
                                        const std::string& content) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace fixtures
