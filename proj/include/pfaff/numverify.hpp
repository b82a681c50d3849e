#pragma once

#include "pfaff/numverify/chamber.hpp"
#include "pfaff/numverify/fuchsian_ode.hpp"
#include "pfaff/numverify/pde_check.hpp"
#include "pfaff/numverify/pfaffian.hpp"
#include "pfaff/numverify/quadrature.hpp"
#include "pfaff/numverify/report_io.hpp"
#include "pfaff/numverify/solutions.hpp"
#include "pfaff/numverify/transport.hpp"
