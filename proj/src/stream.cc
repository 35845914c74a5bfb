#include "dynmis/stream.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dynmis {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t ParseCount(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw StreamError(line, "expected a non-negative integer, got '" +
                                std::string(token) + "'");
  }
  return value;
}

std::string AtLine(std::size_t line, const std::string& what) {
  return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
}

}  // namespace

StreamError::StreamError(std::size_t line, const std::string& what)
    : std::runtime_error(AtLine(line, what)), line_(line) {}

UpdateStream ParseStream(std::string_view text) {
  UpdateStream stream;
  bool have_header = false;
  Graph replay;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw StreamError(line_no, "expected header 'n <count>'");
      }
      const std::uint64_t n = ParseCount(tokens[1], line_no);
      if (n < 1 || n > std::numeric_limits<VertexId>::max()) {
        throw StreamError(line_no, "vertex count out of range");
      }
      stream.header.n = n;
      replay = Graph(n);
      have_header = true;
      continue;
    }

    if (tokens.size() != 3 || (tokens[0] != "+" && tokens[0] != "-")) {
      throw StreamError(line_no, "expected '+ <u> <v>' or '- <u> <v>'");
    }
    const std::uint64_t a = ParseCount(tokens[1], line_no);
    const std::uint64_t b = ParseCount(tokens[2], line_no);
    if (a >= stream.header.n || b >= stream.header.n) {
      throw StreamError(line_no, "vertex id out of range");
    }
    try {
      const Update update = tokens[0] == "+"
                                ? Update::Insert(static_cast<VertexId>(a), static_cast<VertexId>(b))
                                : Update::Delete(static_cast<VertexId>(a), static_cast<VertexId>(b));
      replay.Apply(update);
      stream.updates.push_back(update);
    } catch (const GraphError& e) {
      throw StreamError(line_no, e.what());
    }
  }
  if (!have_header) throw StreamError(0, "missing header 'n <count>'");
  return stream;
}

UpdateStream ReadStreamFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseStream(buffer.str());
}

void ValidateReplay(const UpdateStream& stream) {
  Graph replay(stream.header.n);
  for (std::size_t i = 0; i < stream.updates.size(); ++i) {
    try {
      replay.Apply(stream.updates[i]);
    } catch (const GraphError& e) {
      throw StreamError(0, "update " + std::to_string(i + 1) + ": " + e.what());
    }
  }
}

void WriteStream(std::ostream& out, const UpdateStream& stream,
                 std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "n " << stream.header.n << '\n';
  for (const Update& u : stream.updates) {
    out << (u.op == UpdateOp::kInsert ? '+' : '-') << ' ' << u.edge.u << ' '
        << u.edge.v << '\n';
  }
}

}  // namespace dynmis
