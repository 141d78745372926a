#include "gdsa/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstring>
#include <stdexcept>

#include "gdsa/error.hpp"

namespace gdsa {

Subprocess::Subprocess(const std::vector<std::string>& argv) {
    if (argv.empty()) throw Error("empty command");
    int in_pipe[2];   // parent -> child
    int out_pipe[2];  // child -> parent
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) {
        throw Error("pipe() failed");
    }
    pid_ = fork();
    if (pid_ < 0) throw Error("fork() failed");
    if (pid_ == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        close(in_pipe[0]);
        close(in_pipe[1]);
        close(out_pipe[0]);
        close(out_pipe[1]);
        std::vector<char*> args;
        for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
}

Subprocess::~Subprocess() {
    close_stdin();
    if (from_child_ >= 0) close(from_child_);
    if (pid_ > 0) waitpid(pid_, nullptr, 0);
}

void Subprocess::write_line(const std::string& line) {
    std::string data = line;
    data += '\n';
    std::size_t written = 0;
    while (written < data.size()) {
        const ssize_t n = write(to_child_, data.data() + written, data.size() - written);
        if (n <= 0) throw Error("write to child failed");
        written += static_cast<std::size_t>(n);
    }
}

std::optional<std::string> Subprocess::read_line() {
    while (true) {
        const std::size_t nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            return line;
        }
        char chunk[4096];
        const ssize_t n = read(from_child_, chunk, sizeof(chunk));
        if (n <= 0) {
            if (buffer_.empty()) return std::nullopt;
            std::string line = std::move(buffer_);
            buffer_.clear();
            return line;
        }
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

void Subprocess::close_stdin() {
    if (to_child_ >= 0) {
        close(to_child_);
        to_child_ = -1;
    }
}

int Subprocess::wait() {
    if (pid_ <= 0) return -1;
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> split_command(const std::string& command) {
    std::vector<std::string> out;
    std::string current;
    char quote = 0;
    bool any = false;
    for (char c : command) {
        if (quote) {
            if (c == quote) quote = 0;
            else current += c;
        } else if (c == '\'' || c == '"') {
            quote = c;
            any = true;
        } else if (c == ' ' || c == '\t') {
            if (any || !current.empty()) out.push_back(current);
            current.clear();
            any = false;
        } else {
            current += c;
        }
    }
    if (any || !current.empty()) out.push_back(current);
    return out;
}

}  // namespace gdsa
