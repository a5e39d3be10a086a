#pragma once

#include <cstdint>
#include <string>

namespace diskchaos::cli {

// Shortest round-trip decimal for a double (17 significant digits), also
// used inside JSON. inf/nan render as bare words in CSV but are never
// produced by the commands below for valid inputs.
std::string format_double(double v);

// Minimal order-preserving JSON writer; emitted bytes depend only on the
// call sequence, which keeps command output reproducible.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& name);
  void value(double v);
  void value(std::int64_t v);
  void value(int v) { value(std::int64_t(v)); }
  void value(bool v);
  void value(const std::string& v);
  void value(const char* v) { value(std::string(v)); }

  std::string take();

 private:
  void separate();

  std::string out_;
  std::string stack_;       // '{' or '[' per open scope
  bool need_comma_ = false;
  bool after_key_ = false;
};

// Write to `path` via a temp file + rename so readers never observe a partial
// file; an empty path writes to stdout.
void write_output(const std::string& path, const std::string& content);

}  // namespace diskchaos::cli
