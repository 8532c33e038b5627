#pragma once

#include <memory>
#include <string>

#include "tailsitter/config.hpp"
#include "tailsitter/sim_log.hpp"

namespace tailsitter {

/// {"t":..., "pos":[x,y,z], "euler_deg":[phi,theta,psi], "cmd":[T_L,T_R,dL_deg,dR_deg]}
std::string telemetry_payload(const LogRow& row);

/// Fire-and-forget UDP sink. The socket is non-blocking; the first send or
/// setup failure is reported on stderr and streaming stops for good.
class TelemetrySink {
public:
    explicit TelemetrySink(const TelemetryEndpoint& endpoint);
    ~TelemetrySink();
    TelemetrySink(const TelemetrySink&) = delete;
    TelemetrySink& operator=(const TelemetrySink&) = delete;

    void send(const LogRow& row);
    bool active() const { return fd_ >= 0; }
    std::size_t sent() const { return sent_; }

private:
    void disable(const std::string& why);

    int fd_ = -1;
    std::string destination_;
    std::size_t sent_ = 0;
    struct Address;
    std::unique_ptr<Address> address_;
};

}  // namespace tailsitter
