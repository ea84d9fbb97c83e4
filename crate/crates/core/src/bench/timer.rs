use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TimerKind {
    Cycles,
    Nanos,
}

impl fmt::Display for TimerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TimerKind::Cycles => "cycles",
            TimerKind::Nanos => "nanos",
        })
    }
}

impl FromStr for TimerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycles" => Ok(TimerKind::Cycles),
            "nanos" => Ok(TimerKind::Nanos),
            other => Err(format!("unknown timer kind `{other}`")),
        }
    }
}

/// Monotonic cost source: the time-stamp counter on x86-64, the wall clock
/// in nanoseconds elsewhere.
#[derive(Clone, Copy, Debug)]
pub struct Timer {
    kind: TimerKind,
    origin: Instant,
}

impl Timer {
    /// The best source available on this target.
    pub fn detect() -> Self {
        if cfg!(target_arch = "x86_64") {
            Timer::cycles()
        } else {
            Timer::nanos()
        }
    }

    pub fn nanos() -> Self {
        Timer { kind: TimerKind::Nanos, origin: Instant::now() }
    }

    #[cfg(target_arch = "x86_64")]
    pub fn cycles() -> Self {
        Timer { kind: TimerKind::Cycles, origin: Instant::now() }
    }

    #[cfg(not(target_arch = "x86_64"))]
    pub fn cycles() -> Self {
        Timer::nanos()
    }

    pub fn kind(&self) -> TimerKind {
        self.kind
    }

    #[inline(always)]
    pub fn now(&self) -> u64 {
        match self.kind {
            #[cfg(target_arch = "x86_64")]
            TimerKind::Cycles => unsafe {
                std::arch::x86_64::_mm_lfence();
                let t = std::arch::x86_64::_rdtsc();
                std::arch::x86_64::_mm_lfence();
                t
            },
            _ => self.origin.elapsed().as_nanos() as u64,
        }
    }
}
