// Copyright 2026 The robustcnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>

#include "robustcnot/csv.hpp"
#include "robustcnot/errors.hpp"
#include "robustcnot/pulse.hpp"

namespace robustcnot::pulse {

namespace {

const char *qubit_name(Qubit q) { return q == Qubit::control ? "control" : "target"; }

char axis_name(Axis a) {
  switch (a) {
    case Axis::X:
      return 'X';
    case Axis::Y:
      return 'Y';
    case Axis::Z:
      return 'Z';
    case Axis::H:
      return 'H';
  }
  return '?';
}

void write_sq(std::ostringstream &out, const SingleQubitRotation &r) {
  out << "SQ " << qubit_name(r.qubit) << ' ' << axis_name(r.axis) << ' ' << csv::format_exact(r.angle) << '\n';
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  for (auto t : csv::split(csv::trim(line), ' '))
    if (!t.empty()) out.push_back(t);
  return out;
}

class Reader {
 public:
  Reader(std::string_view text, const std::string &source) : text_(text), source_(source) {}

  bool next(std::string_view &line) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!csv::trim(line).empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &what) const { throw FormatError(source_, line_no_, what); }

  double real(std::string_view tok) const {
    auto v = csv::parse_real(tok);
    if (!v) fail("bad number '" + std::string(tok) + "'");
    return *v;
  }

  SingleQubitRotation sq(const std::vector<std::string_view> &t) const {
    if (t.size() != 4 || t[0] != "SQ") fail("expected 'SQ <qubit> <axis> <angle>'");
    SingleQubitRotation r;
    if (t[1] == "control")
      r.qubit = Qubit::control;
    else if (t[1] == "target")
      r.qubit = Qubit::target;
    else
      fail("unknown qubit '" + std::string(t[1]) + "'");
    if (t[2] == "X")
      r.axis = Axis::X;
    else if (t[2] == "Y")
      r.axis = Axis::Y;
    else if (t[2] == "Z")
      r.axis = Axis::Z;
    else if (t[2] == "H")
      r.axis = Axis::H;
    else
      fail("unknown axis '" + std::string(t[2]) + "'");
    r.angle = real(t[3]);
    return r;
  }

 private:
  std::string_view text_;
  const std::string &source_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

std::string to_text(const PulseSeq &seq) {
  std::ostringstream out;
  out << "# pulseseq level=" << seq.level() << " slices=" << seq.slices() << '\n';
  for (const auto &step : seq.steps()) {
    if (const auto *r = std::get_if<SingleQubitRotation>(&step)) {
      write_sq(out, *r);
    } else if (const auto *ev = std::get_if<HeisenbergEvolution>(&step)) {
      out << "EV " << csv::format_exact(ev->zz_angle) << '\n';
    } else {
      const auto &g = std::get<ParallelGroup>(step);
      out << "PAR " << g.members.size() << '\n';
      for (const auto &m : g.members) write_sq(out, m);
    }
  }
  return out.str();
}

PulseSeq parse_text(std::string_view text, const std::string &source) {
  Reader reader(text, source);
  PulseSeq seq;
  std::string_view line;
  while (reader.next(line)) {
    auto t = tokens(line);
    if (t[0].front() == '#') {
      if (t.size() >= 2 && t[1] == "pulseseq") {
        int level = 0;
        int slices = 1;
        for (std::size_t i = 2; i < t.size(); ++i) {
          auto kv = csv::split(t[i], '=');
          if (kv.size() != 2) reader.fail("bad header field '" + std::string(t[i]) + "'");
          auto v = csv::parse_int(kv[1]);
          if (!v) reader.fail("bad header value '" + std::string(t[i]) + "'");
          if (kv[0] == "level")
            level = static_cast<int>(*v);
          else if (kv[0] == "slices")
            slices = static_cast<int>(*v);
          else
            reader.fail("unknown header field '" + std::string(kv[0]) + "'");
        }
        try {
          seq.set_metadata(level, slices);
        } catch (const std::invalid_argument &e) {
          reader.fail(e.what());
        }
      }
      continue;
    }
    try {
      if (t[0] == "SQ") {
        seq.push(reader.sq(t));
      } else if (t[0] == "EV") {
        if (t.size() != 2) reader.fail("expected 'EV <zz_angle>'");
        seq.push(HeisenbergEvolution{reader.real(t[1])});
      } else if (t[0] == "PAR") {
        if (t.size() != 2) reader.fail("expected 'PAR <k>'");
        auto k = csv::parse_int(t[1]);
        if (!k || *k < 1 || *k > 2) reader.fail("parallel group size must be 1 or 2");
        ParallelGroup g;
        for (long long i = 0; i < *k; ++i) {
          std::string_view member;
          if (!reader.next(member)) reader.fail("truncated parallel group");
          g.members.push_back(reader.sq(tokens(member)));
        }
        seq.push(g);
      } else {
        reader.fail("unknown step kind '" + std::string(t[0]) + "'");
      }
    } catch (const std::invalid_argument &e) {
      reader.fail(e.what());
    }
  }
  return seq;
}

}  // namespace robustcnot::pulse
