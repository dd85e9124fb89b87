//! Helpers shared by the CLI integration tests: running the binary, the
//! README example extractor, and oracles independent of `kodaira-core`.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;
use std::process::Command;

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

/// Runs the `kodaira` binary from the workspace root.
pub fn kodaira(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_kodaira"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("spawn kodaira");
    Output {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        status: out.status.code().expect("exit status"),
    }
}

/// One `$ kodaira ...` line of a README console block with its expected output.
#[derive(Debug)]
pub struct Example {
    pub args: Vec<String>,
    pub status: i32,
    pub expected: String,
}

/// Splits on whitespace, honoring single quotes.
fn shell_words(line: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    let mut started = false;
    for ch in line.chars() {
        match ch {
            '\'' => {
                quoted = !quoted;
                started = true;
            }
            c if c.is_whitespace() && !quoted => {
                if started {
                    words.push(std::mem::take(&mut current));
                    started = false;
                }
            }
            c => {
                current.push(c);
                started = true;
            }
        }
    }
    if started {
        words.push(current);
    }
    words
}

pub fn readme_examples() -> Vec<Example> {
    let readme = std::fs::read_to_string(workspace_root().join("README.md")).expect("read README.md");
    let mut examples: Vec<Example> = Vec::new();
    let mut in_console = false;
    for line in readme.lines() {
        if !in_console {
            in_console = line.trim_end() == "```console";
            continue;
        }
        if line.trim_end() == "```" {
            in_console = false;
            continue;
        }
        if let Some(command) = line.strip_prefix("$ ") {
            let (command, status) = match command.split_once("  # exit ") {
                Some((c, s)) => (c, s.trim().parse().expect("exit status")),
                None => (command, 0),
            };
            let mut args = shell_words(command);
            assert_eq!(args.first().map(String::as_str), Some("kodaira"), "{line}");
            args.remove(0);
            examples.push(Example {
                args,
                status,
                expected: String::new(),
            });
        } else {
            let example = examples.last_mut().expect("output before any command");
            example.expected.push_str(line);
            example.expected.push('\n');
        }
    }
    examples
}

/// Runs one README example; `Err` describes the mismatch.
pub fn check_example(example: &Example) -> Result<(), String> {
    let args: Vec<&str> = example.args.iter().map(String::as_str).collect();
    let out = kodaira(&args);
    let actual = format!("{}{}", out.stdout, out.stderr);
    if out.status != example.status {
        return Err(format!(
            "kodaira {}: exit {} (expected {})",
            args.join(" "),
            out.status,
            example.status
        ));
    }
    if actual != example.expected {
        return Err(format!(
            "kodaira {}: output differs\n--- expected\n{}--- actual\n{}",
            args.join(" "),
            example.expected,
            actual
        ));
    }
    Ok(())
}

/// Fraction-free (Bareiss) elimination to row echelon form. Returns the
/// echelon matrix and the pivot columns.
pub fn bareiss_echelon(m: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut pivots = Vec::new();
    let mut prev = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Basis of the rational kernel, each vector scaled to coprime integers.
pub fn rational_kernel(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.first().map_or(0, Vec::len);
    let (a, pivots) = bareiss_echelon(m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut num = vec![0i128; n];
        let mut den = vec![1i128; n];
        num[f] = 1;
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut s_num = 0i128;
            let mut s_den = 1i128;
            for j in pc + 1..n {
                if a[row][j] == 0 || num[j] == 0 {
                    continue;
                }
                let t_num = a[row][j] * num[j];
                let t_den = den[j];
                s_num = s_num * t_den + t_num * s_den;
                s_den *= t_den;
                let g = gcd(s_num, s_den).max(1);
                s_num /= g;
                s_den /= g;
            }
            let mut x_num = -s_num;
            let mut x_den = s_den * a[row][pc];
            if x_den < 0 {
                x_num = -x_num;
                x_den = -x_den;
            }
            let g = gcd(x_num, x_den).max(1);
            num[pc] = x_num / g;
            den[pc] = x_den / g;
        }
        let l = den.iter().fold(1i128, |acc, &d| acc / gcd(acc, d) * d);
        let mut v: Vec<i128> = (0..n).map(|i| num[i] * (l / den[i])).collect();
        let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x)).max(1);
        for x in &mut v {
            *x /= g;
        }
        basis.push(v);
    }
    basis
}

/// Number of edges outside a BFS spanning forest.
pub fn cycle_rank_by_spanning_forest(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        if a != b {
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut tree_edges = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    tree_edges += 1;
                    queue.push_back(u);
                }
            }
        }
    }
    edges.len() - tree_edges
}
