#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gdsa {

/// Line-oriented child process over stdin/stdout pipes (POSIX).
class Subprocess {
public:
    explicit Subprocess(const std::vector<std::string>& argv);
    ~Subprocess();
    Subprocess(const Subprocess&) = delete;
    Subprocess& operator=(const Subprocess&) = delete;

    void write_line(const std::string& line);
    /// Next full line from the child's stdout; nullopt on EOF.
    std::optional<std::string> read_line();
    void close_stdin();
    /// Waits for exit; returns the exit status.
    int wait();

private:
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
};

/// Whitespace splitting with single/double quote support, for --server-cmd.
std::vector<std::string> split_command(const std::string& command);

}  // namespace gdsa
