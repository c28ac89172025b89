#pragma once

#include <filesystem>
#include <fstream>
#include <string>

// Scratch files for loader tests; everything lives under one directory in
// the system temp area and is overwritten freely.
inline std::filesystem::path temp_dir() {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "morpheval_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path p = temp_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}
