#include "tailsitter/telemetry.hpp"

#include <cerrno>
#include <cstring>
#include <iostream>

#include <netdb.h>
#include <sys/socket.h>
#include <unistd.h>

#include <fmt/format.h>

namespace tailsitter {

struct TelemetrySink::Address {
    sockaddr_storage storage{};
    socklen_t length = 0;
};

std::string telemetry_payload(const LogRow& row)
{
    return fmt::format(R"({{"t":{},"pos":[{},{},{}],"euler_deg":[{},{},{}],"cmd":[{},{},{},{}]}})", row.t,
                       row.position.x(), row.position.y(), row.position.z(), row.euler_deg.x(), row.euler_deg.y(),
                       row.euler_deg.z(), row.thrust_left, row.thrust_right, row.flap_left_deg, row.flap_right_deg);
}

TelemetrySink::TelemetrySink(const TelemetryEndpoint& endpoint)
    : destination_(fmt::format("{}:{}", endpoint.host, endpoint.port)), address_(std::make_unique<Address>())
{
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_DGRAM;
    addrinfo* found = nullptr;
    const std::string port = std::to_string(endpoint.port);
    if (const int rc = getaddrinfo(endpoint.host.c_str(), port.c_str(), &hints, &found); rc != 0) {
        disable(gai_strerror(rc));
        return;
    }
    fd_ = socket(found->ai_family, SOCK_DGRAM | SOCK_NONBLOCK | SOCK_CLOEXEC, 0);
    if (fd_ < 0) {
        freeaddrinfo(found);
        disable(std::strerror(errno));
        return;
    }
    std::memcpy(&address_->storage, found->ai_addr, found->ai_addrlen);
    address_->length = static_cast<socklen_t>(found->ai_addrlen);
    freeaddrinfo(found);
}

TelemetrySink::~TelemetrySink()
{
    if (fd_ >= 0) {
        close(fd_);
    }
}

void TelemetrySink::send(const LogRow& row)
{
    if (fd_ < 0) {
        return;
    }
    const std::string payload = telemetry_payload(row);
    const auto n = sendto(fd_, payload.data(), payload.size(), MSG_DONTWAIT | MSG_NOSIGNAL,
                          reinterpret_cast<const sockaddr*>(&address_->storage), address_->length);
    if (n < 0) {
        // A full send buffer just drops this sample.
        if (errno == EAGAIN || errno == EWOULDBLOCK) {
            return;
        }
        disable(std::strerror(errno));
        return;
    }
    ++sent_;
}

void TelemetrySink::disable(const std::string& why)
{
    std::cerr << "telemetry to " << destination_ << " disabled: " << why << '\n';
    if (fd_ >= 0) {
        close(fd_);
        fd_ = -1;
    }
}

}  // namespace tailsitter
