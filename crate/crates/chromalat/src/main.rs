fn main() {
    // die quietly when the reader closes the pipe, like any line-oriented tool
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(chromalat::run());
}
