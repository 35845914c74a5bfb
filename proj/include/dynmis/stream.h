#ifndef DYNMIS_STREAM_H_
#define DYNMIS_STREAM_H_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynmis/graph.h"

namespace dynmis {

// Update stream text format (UTF-8, LF line endings):
//
//   # comment lines start with '#'
//   n <vertex count>
//   + <u> <v>        insert edge
//   - <u> <v>        delete edge
//
// Ids are 0-based decimals; tokens are whitespace-separated. The first
// non-comment line must be the `n` header.

struct StreamHeader {
  std::size_t n = 0;
};

struct UpdateStream {
  StreamHeader header;
  std::vector<Update> updates;
};

class StreamError : public std::runtime_error {
 public:
  // line == 0 means the error is not tied to a specific line.
  StreamError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses and replays the stream; throws StreamError on malformed text,
// self-loops, out-of-range ids, duplicate inserts or missing deletes.
UpdateStream ParseStream(std::string_view text);
UpdateStream ReadStreamFile(const std::string& path);

// Replays `updates` on an empty graph; throws StreamError naming the 1-based
// update index of the first invalid update.
void ValidateReplay(const UpdateStream& stream);

void WriteStream(std::ostream& out, const UpdateStream& stream,
                 std::string_view comment = {});

}  // namespace dynmis

#endif  // DYNMIS_STREAM_H_
