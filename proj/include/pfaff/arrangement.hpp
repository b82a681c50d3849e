#pragma once

#include "pfaff/arrangement/chambers.hpp"
#include "pfaff/arrangement/family.hpp"
#include "pfaff/arrangement/family_io.hpp"
#include "pfaff/arrangement/matroid.hpp"
#include "pfaff/arrangement/os_algebra.hpp"
