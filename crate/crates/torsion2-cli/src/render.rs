//! Plain-text table rendering. Styling is a bold header row, dropped
//! entirely when `NO_COLOR` is set so CI output stays byte-deterministic.

pub fn styling_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none()
}

pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let render_row = |cells: &[String], out: &mut String| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate().take(cols) {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i].saturating_sub(cell.chars().count());
            if i + 1 < cols {
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    if styling_enabled() {
        let mut line = String::new();
        render_row(&header_cells, &mut line);
        out.push_str("\x1b[1m");
        out.push_str(line.trim_end());
        out.push_str("\x1b[0m\n");
    } else {
        render_row(&header_cells, &mut out);
    }
    let sep: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    render_row(&sep, &mut out);
    for row in rows {
        render_row(row, &mut out);
    }
    out
}
