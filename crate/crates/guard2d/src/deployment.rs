//! Solution candidates: disc centers plus a common radius.

use crate::geom::Point2;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which solver produced a deployment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cont,
    Gonzalez,
    Ilp,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Cont => write!(f, "cont"),
            Method::Gonzalez => write!(f, "gonzalez"),
            Method::Ilp => write!(f, "ilp"),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cont" => Ok(Method::Cont),
            "gonzalez" => Ok(Method::Gonzalez),
            "ilp" => Ok(Method::Ilp),
            other => Err(format!(
                "unknown method '{other}' (expected cont, gonzalez, or ilp)"
            )),
        }
    }
}

/// `k` disc centers sharing one sensing radius.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deployment {
    pub centers: Vec<Point2>,
    pub radius: f64,
    pub method: Method,
}

impl Deployment {
    pub fn new(centers: Vec<Point2>, radius: f64, method: Method) -> Self {
        Self {
            centers,
            radius,
            method,
        }
    }
}
