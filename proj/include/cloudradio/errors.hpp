// SPDX-License-Identifier: Apache-2.0
//
// cloudradio: rate analysis for cooperative (cloud) radio networks
// Copyright (C) 2026 The cloudradio authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CLOUDRADIO_ERRORS_HPP
#define CLOUDRADIO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cloudradio
{
    // Invalid argument value (negative intensity, l out of range, ...).
    class ParameterError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Input has the wrong shape or is empty where data is required.
    class StructuralError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    // A numerical routine failed: non-HPD pivot, quadrature not converged, ...
    class NumericalError : public std::runtime_error
    {
    public:
        NumericalError(const std::string &what, double achieved = 0.0, std::ptrdiff_t index = -1)
            : std::runtime_error(what), achieved_(achieved), index_(index) {}

        // Achieved tolerance (quadrature) or offending value.
        double achieved() const noexcept { return achieved_; }
        // Failing pivot / stream index, -1 if not applicable.
        std::ptrdiff_t index() const noexcept { return index_; }

    private:
        double achieved_;
        std::ptrdiff_t index_;
    };
}

#endif
