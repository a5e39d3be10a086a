#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace diskchaos::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (need_comma_) out_ += ',';
}

void JsonWriter::begin_object() {
  separate();
  out_ += '{';
  stack_ += '{';
  need_comma_ = false;
}

void JsonWriter::end_object() {
  out_ += '}';
  stack_.pop_back();
  need_comma_ = true;
}

void JsonWriter::begin_array() {
  separate();
  out_ += '[';
  stack_ += '[';
  need_comma_ = false;
}

void JsonWriter::end_array() {
  out_ += ']';
  stack_.pop_back();
  need_comma_ = true;
}

void JsonWriter::key(const std::string& name) {
  if (need_comma_) out_ += ',';
  out_ += '"';
  out_ += name;  // keys are fixed identifiers, no escaping needed
  out_ += "\":";
  need_comma_ = false;
  after_key_ = true;
}

void JsonWriter::value(double v) {
  separate();
  out_ += format_double(v);
  need_comma_ = true;
}

void JsonWriter::value(std::int64_t v) {
  separate();
  out_ += std::to_string(v);
  need_comma_ = true;
}

void JsonWriter::value(bool v) {
  separate();
  out_ += v ? "true" : "false";
  need_comma_ = true;
}

void JsonWriter::value(const std::string& v) {
  separate();
  out_ += '"';
  for (char c : v) {
    if (c == '"' || c == '\\') out_ += '\\';
    out_ += c;
  }
  out_ += '"';
  need_comma_ = true;
}

std::string JsonWriter::take() {
  if (!stack_.empty()) throw std::logic_error("JsonWriter: unbalanced scopes");
  return std::move(out_);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move " + tmp + " into place");
  }
}

}  // namespace diskchaos::cli
